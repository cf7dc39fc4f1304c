#include "billiards/fourier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace billiards {

FourierSeries::FourierSeries(double constant, std::vector<double> cos_coeffs,
                             std::vector<double> sin_coeffs)
    : constant_(constant), cos_(std::move(cos_coeffs)), sin_(std::move(sin_coeffs)) {
    // Pad to a common degree so harmonic l always has both coefficients.
    const std::size_t L = std::max(cos_.size(), sin_.size());
    cos_.resize(L, 0.0);
    sin_.resize(L, 0.0);
}

double FourierSeries::operator()(double x) const {
    double v = constant_;
    for (std::size_t i = 0; i < cos_.size(); ++i) {
        const double lx = static_cast<double>(i + 1) * x;
        v += cos_[i] * std::cos(lx) + sin_[i] * std::sin(lx);
    }
    return v;
}

FourierSeries FourierSeries::derivative() const {
    std::vector<double> dc(cos_.size()), ds(sin_.size());
    for (std::size_t i = 0; i < cos_.size(); ++i) {
        const double l = static_cast<double>(i + 1);
        dc[i] = l * sin_[i];
        ds[i] = -l * cos_[i];
    }
    // d/dx [c cos(lx) + s sin(lx)] = l s cos(lx) - l c sin(lx)
    return FourierSeries(0.0, std::move(dc), std::move(ds));
}

bool FourierSeries::is_constant() const {
    for (std::size_t i = 0; i < cos_.size(); ++i) {
        if (cos_[i] != 0.0 || sin_[i] != 0.0) return false;
    }
    return true;
}

bool FourierSeries::is_pi_antiperiodic() const {
    if (constant_ != 0.0) return false;
    for (std::size_t i = 0; i < cos_.size(); ++i) {
        const bool even_order = ((i + 1) % 2) == 0;
        if (even_order && (cos_[i] != 0.0 || sin_[i] != 0.0)) return false;
    }
    return true;
}

bool FourierSeries::has_harmonic_multiple_of(int n) const {
    if (n <= 0) throw std::invalid_argument("FourierSeries: n must be positive");
    for (std::size_t i = 0; i < cos_.size(); ++i) {
        const std::size_t l = i + 1;
        if (l % static_cast<std::size_t>(n) == 0 &&
            (cos_[i] != 0.0 || sin_[i] != 0.0)) {
            return true;
        }
    }
    return false;
}

FourierSeries FourierSeries::fit(const std::vector<double>& values,
                                 std::size_t degree) {
    const std::size_t N = values.size();
    if (N == 0) throw std::invalid_argument("FourierSeries::fit: no samples");
    if (2 * degree + 1 > N) {
        throw std::invalid_argument(
            "FourierSeries::fit: degree too high for sample count");
    }
    const double w = 2.0 * std::numbers::pi / static_cast<double>(N);
    double c0 = 0.0;
    for (double v : values) c0 += v;
    c0 /= static_cast<double>(N);

    std::vector<double> cs(degree, 0.0), ss(degree, 0.0);
    for (std::size_t l = 1; l <= degree; ++l) {
        double sc = 0.0, sssum = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double ang = w * static_cast<double>(l) * static_cast<double>(i);
            sc += values[i] * std::cos(ang);
            sssum += values[i] * std::sin(ang);
        }
        cs[l - 1] = 2.0 * sc / static_cast<double>(N);
        ss[l - 1] = 2.0 * sssum / static_cast<double>(N);
    }
    return FourierSeries(c0, std::move(cs), std::move(ss));
}

}  // namespace billiards
