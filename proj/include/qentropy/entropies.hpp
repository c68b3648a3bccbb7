#pragma once

// Entropy functionals, all in nats.

#include <compare>
#include <span>

#include "qentropy/linalg.hpp"
#include "qentropy/states.hpp"

namespace qentropy {

/// Entropy-like value that may be +infinity (relative entropies only).
/// Only comparisons are defined; value() refuses to hand out infinity.
class EntropyValue {
 public:
  static EntropyValue finite(double v) { return EntropyValue(v, false); }
  static EntropyValue infinite() { return EntropyValue(0.0, true); }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  /// Throws NumericalFault when infinite.
  double value() const;

  friend bool operator==(const EntropyValue& a, const EntropyValue& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend std::partial_ordering operator<=>(const EntropyValue& a, const EntropyValue& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }
  friend std::partial_ordering operator<=>(const EntropyValue& a, double b) {
    if (a.infinite_) return std::partial_ordering::greater;
    return a.value_ <=> b;
  }

 private:
  EntropyValue(double v, bool inf) : value_(v), infinite_(inf) {}
  double value_;
  bool infinite_;
};

/// -u log u with eta(0) = 0.
double eta(double u);
/// sum_i eta(p_i); p need not be normalized.
double shannon(std::span<const double> p);
double binary_entropy(double eps);

double von_neumann(const DensityMatrix& rho);
/// Entropy of a PSD operator of any trace, H(lambda(h)). Eigenvalues in
/// [-kPsdTol, 0) are read as 0.
double operator_entropy(const HermitianMatrix& h);

/// S(A|B) = S(rho_AB) - S(rho_B).
double conditional_entropy(const DensityMatrix& rho_ab, BipartiteDims dims);

/// Umegaki relative entropy. sigma may be any PSD operator (unnormalized is
/// fine). Infinite when supp(rho) is not contained in supp(sigma).
EntropyValue relative_entropy(const DensityMatrix& rho, const HermitianMatrix& sigma);

/// inf { lambda > 0 : rho <= e^lambda sigma }.
EntropyValue dmax(const DensityMatrix& rho, const HermitianMatrix& sigma);

}  // namespace qentropy
