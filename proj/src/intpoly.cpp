#include "quermass/intpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace quermass {

BigInt big_binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

IntPolynomial IntPolynomial::monomial(int degree, BigInt coefficient) {
    if (degree < 0) throw std::invalid_argument("monomial: negative degree");
    std::vector<BigInt> c(degree + 1, BigInt(0));
    c[degree] = std::move(coefficient);
    return IntPolynomial(std::move(c));
}

void IntPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[i];
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& other) const {
    std::vector<BigInt> out(std::max(coeffs_.size(), other.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out[i] += other.coeffs_[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& other) const {
    std::vector<BigInt> out(std::max(coeffs_.size(), other.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out[i] -= other.coeffs_[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& other) const {
    if (is_zero() || other.is_zero()) return IntPolynomial();
    std::vector<BigInt> out(coeffs_.size() + other.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * other.coeffs_[j];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const BigInt& scalar) const {
    std::vector<BigInt> out = coeffs_;
    for (auto& c : out) c *= scalar;
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::pow(int exponent) const {
    if (exponent < 0) throw std::invalid_argument("pow: negative exponent");
    IntPolynomial result({BigInt(1)});
    for (int i = 0; i < exponent; ++i) result = result * (*this);
    return result;
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (os.tellp() > 0) os << (coeffs_[i] > 0 ? " + " : " - ");
        else if (coeffs_[i] < 0) os << "-";
        os << boost::multiprecision::abs(coeffs_[i]);
        if (i > 0) os << "*x^" << i;
    }
    return os.str();
}

IntPolynomial binomial_expand(const BigInt& a, const BigInt& b, int m) {
    if (m < 0) throw std::invalid_argument("binomial_expand: negative exponent");
    return IntPolynomial({a, b}).pow(m);
}

bool verify_generating_identity(int n) {
    if (n < 2) throw std::invalid_argument("verify_generating_identity: n must be >= 2");
    const IntPolynomial one_minus_x({BigInt(1), BigInt(-1)});
    IntPolynomial sum;
    for (int q = 0; q <= n - 2; ++q)
        sum = sum + IntPolynomial::monomial(q, big_binomial(n - 2, q)) * one_minus_x.pow(n + 1 - q);
    return sum == IntPolynomial({BigInt(1), BigInt(-3), BigInt(3), BigInt(-1)});
}

IntPolynomial inner_parallel_coefficients(int d, int q) {
    if (q < 0 || q > d) throw std::out_of_range("inner_parallel_coefficients: q out of range");
    const IntPolynomial one_minus_x({BigInt(1), BigInt(-1)});
    return IntPolynomial::monomial(q) * one_minus_x.pow(d - q);
}

TripleCertificate triple_from_consecutive(int i, int j, int k, int d) {
    if (!(0 <= i && i < j && j < k && k <= d))
        throw std::invalid_argument("triple_from_consecutive: need 0 <= i < j < k <= d");
    IntPolynomial target = IntPolynomial::monomial(i, BigInt(k - j)) +
                           IntPolynomial::monomial(j, BigInt(i - k)) +
                           IntPolynomial::monomial(k, BigInt(j - i));

    // Forward substitution in the monomial basis; D_l = x^l (1 - 2x + x^2)
    // is monic at x^l, so the multipliers are integers.
    std::vector<BigInt> m(k - 1 - i, BigInt(0));
    for (int l = i; l <= k - 2; ++l) {
        BigInt value = target.coeff(l);
        if (l - 1 >= i) value += 2 * m[l - 1 - i];
        if (l - 2 >= i) value -= m[l - 2 - i];
        m[l - i] = value;
    }

    const IntPolynomial deficit({BigInt(1), BigInt(-2), BigInt(1)});
    IntPolynomial expansion;
    for (int l = i; l <= k - 2; ++l)
        expansion = expansion + IntPolynomial::monomial(l, m[l - i]) * deficit;
    if (!(expansion == target))
        throw std::logic_error("triple_from_consecutive: certificate does not re-expand to target");
    for (const auto& mult : m)
        if (mult < 0)
            throw std::logic_error("triple_from_consecutive: negative multiplier in certificate");
    return TripleCertificate{i, j, k, std::move(m), std::move(target)};
}

}  // namespace quermass
