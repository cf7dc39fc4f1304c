#ifndef BILLIARDS_FOURIER_HPP
#define BILLIARDS_FOURIER_HPP

#include <cstddef>
#include <vector>

namespace billiards {

/// Real trigonometric polynomial
///   g(x) = c0 + sum_{l=1}^{L} ( c_l cos(l x) + s_l sin(l x) ).
/// Finite degree keeps g entire and makes structural predicates
/// (constancy, pi-antiperiodicity, harmonic content) exact.
class FourierSeries {
public:
    FourierSeries() = default;
    FourierSeries(double constant, std::vector<double> cos_coeffs,
                  std::vector<double> sin_coeffs);

    double operator()(double x) const;

    /// Term-by-term derivative; degree is preserved, constant term drops.
    FourierSeries derivative() const;

    double constant_term() const { return constant_; }
    const std::vector<double>& cos_coeffs() const { return cos_; }
    const std::vector<double>& sin_coeffs() const { return sin_; }
    std::size_t degree() const { return cos_.size(); }

    /// True when every harmonic coefficient vanishes.
    bool is_constant() const;

    /// g(x + pi) = -g(x): zero constant term and odd harmonics only.
    bool is_pi_antiperiodic() const;

    /// Some nonzero coefficient at order l with l a positive multiple of n.
    bool has_harmonic_multiple_of(int n) const;

    /// Least-squares projection of equispaced samples v_i = g(2 pi i / N)
    /// onto a series of the given degree (discrete Fourier analysis).
    /// Requires degree <= (N - 1) / 2.
    static FourierSeries fit(const std::vector<double>& values,
                             std::size_t degree);

private:
    double constant_ = 0.0;
    std::vector<double> cos_;  // index l-1 holds the coefficient of cos(l x)
    std::vector<double> sin_;
};

}  // namespace billiards

#endif
