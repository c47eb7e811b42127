// bigint.hpp -- exact integer type and the magnitude-cap machinery shared by
// the whole library.  Every count, coefficient and bound in this project is an
// exact integer; there is no floating point anywhere.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace kolchin {

using bigint = boost::multiprecision::cpp_int;

// Limits for the Ackermann-flavoured recursions.  Values that would exceed
// max_bits, or rewrite runs longer than max_steps, are refused loudly instead
// of grinding forever.  The CLI exposes max_bits via --cap-bits / env var.
struct cap_settings {
    unsigned long max_bits = 1000000;   // bits per intermediate integer
    unsigned long max_steps = 1000000;  // rewrite/iteration steps per run
};

inline const cap_settings& default_caps()
{
    static const cap_settings caps{};
    return caps;
}

// Thrown when a computation would blow past the configured cap.  Carries a
// symbolic description of the offending quantity so callers can report what
// the value *would* be instead of silently truncating.
class cap_error : public std::runtime_error {
public:
    cap_error(std::string expression, const std::string& detail)
        : std::runtime_error(detail), expression_(std::move(expression))
    {
    }

    const std::string& expression() const { return expression_; }

private:
    std::string expression_;
};

inline unsigned long bit_size(const bigint& v)
{
    if (v == 0)
        return 1;
    return static_cast<unsigned long>(boost::multiprecision::msb(abs(v))) + 1;
}

// Check a freshly computed value against the bit cap; returns it unchanged so
// the call can be chained inside expressions.
inline const bigint& capped(const bigint& v, const cap_settings& caps, const std::string& expression)
{
    if (bit_size(v) > caps.max_bits)
        throw cap_error(expression,
                        expression + " needs " + std::to_string(bit_size(v)) + " bits (cap " +
                            std::to_string(caps.max_bits) + ")");
    return v;
}

// Guard used before producing a value of ~`bits` bits without materializing it.
inline void require_bits(const bigint& bits, const cap_settings& caps, const std::string& expression)
{
    if (bits > caps.max_bits)
        throw cap_error(expression, expression + " needs about " + bits.str() + " bits (cap " +
                                        std::to_string(caps.max_bits) + ")");
}

} // namespace kolchin
