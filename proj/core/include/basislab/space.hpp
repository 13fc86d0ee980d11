#ifndef BASISLAB_SPACE_HPP
#define BASISLAB_SPACE_HPP

#include <string>
#include <string_view>

namespace basislab {

enum class Family { Lp, C0, Lorentz, Tsirelson, PConvexTsirelson, Summing };

std::string_view family_token(Family f);

/// A named norm family with parameters. Parsed from the descriptor
/// mini-language:
///
///   family ":" key "=" value { "," key "=" value }
///
/// families: lp | c0 | lorentz | tsirelson | tp | summing
/// keys:     p (>= 1), theta (in (0,1)), s (Lorentz weight w_i = i^-s)
///
/// Examples: "lp:p=1", "tp:p=2,theta=0.5", "lorentz:p=1,s=0.5".
struct SpaceDescriptor {
    Family family = Family::Lp;
    double p = 1.0;       // Lp / Lorentz / PConvexTsirelson
    double theta = 0.5;   // Tsirelson families
    double s = 0.5;       // Lorentz weight exponent

    /// Canonical descriptor text (round-trips through parse_space).
    std::string text() const;
};

SpaceDescriptor parse_space(std::string_view text);

} // namespace basislab

#endif
