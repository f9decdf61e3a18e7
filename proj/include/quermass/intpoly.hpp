#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace quermass {

using BigInt = boost::multiprecision::cpp_int;

BigInt big_binomial(int n, int k);

/// Integer-coefficient univariate polynomial, coefficient index = degree.
/// Trailing zeros are normalized away; the zero polynomial has degree -1.
class IntPolynomial {
  public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);
    static IntPolynomial monomial(int degree, BigInt coefficient = 1);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    BigInt coeff(int i) const;
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    IntPolynomial operator+(const IntPolynomial& other) const;
    IntPolynomial operator-(const IntPolynomial& other) const;
    IntPolynomial operator*(const IntPolynomial& other) const;
    IntPolynomial operator*(const BigInt& scalar) const;
    IntPolynomial pow(int exponent) const;
    bool operator==(const IntPolynomial& other) const { return coeffs_ == other.coeffs_; }

    std::string to_string() const;

  private:
    std::vector<BigInt> coeffs_;
    void normalize();
};

/// (a + b x)^m.
IntPolynomial binomial_expand(const BigInt& a, const BigInt& b, int m);

/// Checks the generating-function collapse
/// sum_{q=0}^{n-2} C(n-2,q) x^q (1-x)^{n+1-q} == (1-x)^3 for n >= 2.
bool verify_generating_identity(int n);

/// Generating polynomial of the inner-parallel-body expansion of W_q in
/// ambient dimension d: x^q (1-x)^{d-q}.
IntPolynomial inner_parallel_coefficients(int d, int q);

/// Nonnegative integer multipliers m_l with
/// (k-j)x^i + (i-k)x^j + (j-i)x^k = sum_l m_l x^l (1-x)^2, l = i..k-2.
/// Verified by re-expansion; throws std::logic_error if no nonnegative
/// certificate exists (which would falsify the consecutive-index reduction).
struct TripleCertificate {
    int i, j, k;
    std::vector<BigInt> multipliers;  // multipliers[l - i] scales x^l (1-x)^2
    IntPolynomial target;
};

TripleCertificate triple_from_consecutive(int i, int j, int k, int d);

}  // namespace quermass
