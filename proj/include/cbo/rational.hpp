#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace cbo {

// Exact fraction. Always stored reduced with a positive denominator, so
// field-wise equality is value equality. Densities are compared with these,
// never with floating point.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    std::string str() const;  // "p/q"

    friend bool operator==(const Rational&, const Rational&) = default;
    std::strong_ordering operator<=>(const Rational& other) const;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace cbo
