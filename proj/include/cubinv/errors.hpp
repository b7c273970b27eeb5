#ifndef CUBINV_ERRORS_HPP
#define CUBINV_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cubinv {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Two polynomials from different variable spaces were combined.
class space_mismatch : public error {
public:
    explicit space_mismatch(const std::string& what) : error(what) {}
};

/// Vector or matrix dimensions do not line up.
class dimension_mismatch : public error {
public:
    explicit dimension_mismatch(const std::string& what) : error(what) {}
};

/// A linear system or matrix inversion hit a singular matrix.
class singular_matrix : public error {
public:
    explicit singular_matrix(const std::string& what) : error(what) {}
};

/// Text input violated the form grammar; `position` is a 0-based offset.
class parse_error : public error {
public:
    parse_error(std::size_t position, const std::string& what)
        : error(what), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Input form fails a structural precondition (wrong arity, not homogeneous,
/// wrong degree).
class invalid_form : public error {
public:
    explicit invalid_form(const std::string& what) : error(what) {}
};

/// Input form is identically zero where a nonzero form is required.
class zero_form : public error {
public:
    explicit zero_form(const std::string& what) : error(what) {}
};

/// A differential pairing was requested with operator order exceeding the
/// target order; the other pairing direction must be used instead.
class order_mismatch : public error {
public:
    explicit order_mismatch(const std::string& what) : error(what) {}
};

/// Interpolation point sets kept producing singular systems and the retry
/// budget ran out.
class interpolation_exhausted : public error {
public:
    explicit interpolation_exhausted(const std::string& what) : error(what) {}
};

/// Pentahedral data outside the domain of a closed formula (a coefficient is
/// zero where a reciprocal is required).
class oracle_domain_error : public error {
public:
    explicit oracle_domain_error(const std::string& what) : error(what) {}
};

} // namespace cubinv

#endif
