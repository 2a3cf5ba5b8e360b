#include "acps/special_fn.hpp"

#include <array>
#include <cmath>
#include <string>

#include "acps/errors.hpp"

namespace acps {
namespace {

// Lanczos approximation with N = 13, g = 6.024680040776729583740234375,
// in rational form sum(num[k] z^k) / sum(denom[k] z^k) where the
// denominator is z (z + 1) ... (z + 11). The numerator is pre-scaled by exp(-g).
constexpr double kLanczosG = 6.024680040776729583740234375;

constexpr std::array<double, 13> kNum = {
    56906521.91347156388090791033559122686859,
    103794043.1163445451906271053616070238554,
    86363131.28813859145546927288977868422342,
    43338889.32467613834773723740590533316085,
    14605578.08768506808414169982791359218571,
    3481712.15498064590882071018964774556468,
    601859.6171681098786670226533699352302507,
    75999.29304014542649875303443598909137092,
    6955.999602515376140356310115515198987526,
    449.9445569063168119446858607650988409623,
    19.51992788247617482847860966235652136208,
    0.5098416655656676188125178644804694509993,
    0.006061842346248906525783753964555936883222,
};

constexpr std::array<double, 13> kDenom = {
    0.0,       39916800.0, 120543840.0, 150917976.0, 105258076.0,
    45995730.0, 13339535.0, 2637558.0,   357423.0,    32670.0,
    1925.0,    66.0,       1.0,
};

// Evaluates the rational function; for z > 1 both polynomials are evaluated
// in 1/z to keep Horner's scheme well conditioned.
double lanczos_sum_scaled(double z) {
    double num = 0.0;
    double den = 0.0;
    if (z <= 1.0) {
        for (std::size_t k = kNum.size(); k-- > 0;) {
            num = num * z + kNum[k];
            den = den * z + kDenom[k];
        }
    } else {
        const double w = 1.0 / z;
        for (std::size_t k = 0; k < kNum.size(); ++k) {
            num = num * w + kNum[k];
            den = den * w + kDenom[k];
        }
    }
    return num / den;
}

void require_positive(double x, const char* what) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError(std::string(what) + ": argument must be a positive finite number, got " +
                          std::to_string(x));
    }
}

}  // namespace

double gamma(double x) {
    require_positive(x, "gamma");
    const double zgh = x + kLanczosG - 0.5;
    // Split the power so zgh^(x - 1/2) does not overflow before the exp() divides it down.
    const double half_power = std::pow(zgh, 0.5 * (x - 0.5));
    return lanczos_sum_scaled(x) * half_power * (half_power * std::exp(0.5 - x));
}

double beta(double x, double y) {
    require_positive(x, "beta");
    require_positive(y, "beta");
    return gamma(x) * gamma(y) / gamma(x + y);
}

double gamma_ratio(double a, double b) {
    return gamma(a) / gamma(b);
}

}  // namespace acps
