#include "cbo/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace cbo {

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    num_ = g != 0 ? num / g : 0;
    den_ = g != 0 ? den / g : 1;
}

std::string Rational::str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering Rational::operator<=>(const Rational& other) const {
    // Denominators are positive, so cross multiplication preserves order.
    const auto lhs = static_cast<__int128>(num_) * other.den_;
    const auto rhs = static_cast<__int128>(other.num_) * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace cbo
