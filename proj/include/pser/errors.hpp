#pragma once

#include <stdexcept>
#include <string>

namespace pser {

// Base of every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A coefficient or degree was requested beyond a series' known precision,
// or a triangle is too shallow for the requested operation.
class precision_error : public error {
public:
    using error::error;
};

// Mathematical domain violations (zero constant term, wrong order, ...).
class domain_error : public error {
public:
    using error::error;
};

class division_domain_error : public domain_error {
public:
    explicit division_domain_error(const std::string& what)
        : domain_error("division domain: " + what) {}
};

class composition_domain_error : public domain_error {
public:
    explicit composition_domain_error(const std::string& what)
        : domain_error("composition domain: " + what) {}
};

class not_invertible_error : public domain_error {
public:
    explicit not_invertible_error(const std::string& what)
        : domain_error("not invertible: " + what) {}
};

class not_contractive_error : public domain_error {
public:
    explicit not_contractive_error(const std::string& what)
        : domain_error("not contractive: " + what) {}
};

} // namespace pser
