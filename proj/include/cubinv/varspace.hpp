#ifndef CUBINV_VARSPACE_HPP
#define CUBINV_VARSPACE_HPP

#include <memory>
#include <string>
#include <vector>

namespace cubinv {

/// A named, ordered set of variables. Polynomials over distinct spaces never
/// mix; equality is structural (name and labels).
struct VarSpace {
    std::string name;
    std::vector<std::string> labels;

    std::size_t arity() const { return labels.size(); }

    friend bool operator==(const VarSpace& a, const VarSpace& b) {
        return a.name == b.name && a.labels == b.labels;
    }
    friend bool operator!=(const VarSpace& a, const VarSpace& b) { return !(a == b); }
};

using SpacePtr = std::shared_ptr<const VarSpace>;

inline bool same_space(const SpacePtr& a, const SpacePtr& b) {
    return a == b || (a && b && *a == *b);
}

/// Quaternary point space {x, y, z, w}.
inline SpacePtr primal_quaternary() {
    static const SpacePtr s = std::make_shared<VarSpace>(
        VarSpace{"primal4", {"x", "y", "z", "w"}});
    return s;
}

/// Quaternary plane space {y1..y4}; contravariants live here.
inline SpacePtr dual_quaternary() {
    static const SpacePtr s = std::make_shared<VarSpace>(
        VarSpace{"dual4", {"y1", "y2", "y3", "y4"}});
    return s;
}

/// Ternary space {u1, u2, u3}; plane restrictions of quaternary forms live here.
inline SpacePtr ternary() {
    static const SpacePtr s = std::make_shared<VarSpace>(
        VarSpace{"ternary", {"u1", "u2", "u3"}});
    return s;
}

/// k replicated ternary variable triples for transvection. Replica r
/// occupies indices 3r..3r+2 with letters (X, Y, Z).
inline SpacePtr replicated_ternary(int replicas) {
    VarSpace s;
    s.name = "replicated" + std::to_string(replicas);
    s.labels.reserve(3 * static_cast<std::size_t>(replicas));
    static const char* letters[3] = {"X", "Y", "Z"};
    for (int r = 0; r < replicas; ++r)
        for (int v = 0; v < 3; ++v)
            s.labels.push_back(std::string(letters[v]) + std::to_string(r + 1));
    return std::make_shared<VarSpace>(std::move(s));
}

} // namespace cubinv

#endif
