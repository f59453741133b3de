#pragma once

#include <stdexcept>
#include <string>

namespace zetalab {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class PoleError : public Error {
public:
    using Error::Error;
};

class NonFiniteIntegrand : public Error {
public:
    using Error::Error;
};

class SymmetryViolation : public Error {
public:
    using Error::Error;
};

class NonConvergence : public Error {
public:
    NonConvergence(const std::string& what, double partial_re, double partial_im, double err)
        : Error(what), partial_re_(partial_re), partial_im_(partial_im), err_(err) {}
    explicit NonConvergence(const std::string& what) : Error(what) {}

    double partial_re() const noexcept { return partial_re_; }
    double partial_im() const noexcept { return partial_im_; }
    double err_estimate() const noexcept { return err_; }

private:
    double partial_re_ = 0.0;
    double partial_im_ = 0.0;
    double err_ = 0.0;
};

} // namespace zetalab
