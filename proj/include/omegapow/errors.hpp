#pragma once

#include <stdexcept>
#include <string>

namespace omegapow
{

/// Base class of every exception thrown by the library.
class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class invalid_alphabet : public error { public: using error::error; };
class alphabet_mismatch : public error { public: using error::error; };
class invalid_letter : public error { public: using error::error; };
class not_a_prefix : public error { public: using error::error; };
class invalid_address : public error { public: using error::error; };
class not_in_knj : public error { public: using error::error; };
class not_in_t : public error { public: using error::error; };
class not_in_p : public error { public: using error::error; };
class in_mu_omega : public error { public: using error::error; };
class f_undefined : public error { public: using error::error; };
class budget_exceeded : public error { public: using error::error; };
class index_overflow : public error { public: using error::error; };
class invalid_rtree : public error { public: using error::error; };
class invalid_automaton : public error { public: using error::error; };
class invalid_parameter : public error { public: using error::error; };

/// Literal or file syntax error; `position` is the offending byte offset.
class syntax_error : public error
{
public:
    syntax_error(const std::string& what, std::size_t position)
        : error(what + " at position " + std::to_string(position)), position_(position)
    {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace omegapow
