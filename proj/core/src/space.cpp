#include "basislab/space.hpp"

#include <charconv>
#include <cstdio>
#include <map>

#include "basislab/errors.hpp"

namespace basislab {

std::string_view family_token(Family f) {
    switch (f) {
        case Family::Lp: return "lp";
        case Family::C0: return "c0";
        case Family::Lorentz: return "lorentz";
        case Family::Tsirelson: return "tsirelson";
        case Family::PConvexTsirelson: return "tp";
        case Family::Summing: return "summing";
    }
    return "?";
}

namespace {

std::string fmt_param(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

double parse_number(std::string_view tok) {
    double v = 0.0;
    const auto* end = tok.data() + tok.size();
    auto [p, ec] = std::from_chars(tok.data(), end, v);
    if (ec != std::errc() || p != end)
        throw ParseError("space descriptor: bad numeric value '" + std::string(tok) + "'");
    return v;
}

} // namespace

std::string SpaceDescriptor::text() const {
    std::string t(family_token(family));
    switch (family) {
        case Family::Lp:
        case Family::Lorentz:
            t += ":p=" + fmt_param(p);
            if (family == Family::Lorentz) t += ",s=" + fmt_param(s);
            break;
        case Family::Tsirelson:
            t += ":theta=" + fmt_param(theta);
            break;
        case Family::PConvexTsirelson:
            t += ":p=" + fmt_param(p) + ",theta=" + fmt_param(theta);
            break;
        case Family::C0:
        case Family::Summing:
            break;
    }
    return t;
}

SpaceDescriptor parse_space(std::string_view text) {
    std::string_view head = text;
    std::string_view params;
    if (auto colon = text.find(':'); colon != std::string_view::npos) {
        head = text.substr(0, colon);
        params = text.substr(colon + 1);
    }

    SpaceDescriptor d;
    if (head == "lp") d.family = Family::Lp;
    else if (head == "c0") d.family = Family::C0;
    else if (head == "lorentz") d.family = Family::Lorentz;
    else if (head == "tsirelson") d.family = Family::Tsirelson;
    else if (head == "tp") d.family = Family::PConvexTsirelson;
    else if (head == "summing") d.family = Family::Summing;
    else throw ParseError("space descriptor: unknown family '" + std::string(head) + "'");

    while (!params.empty()) {
        std::string_view item = params;
        if (auto comma = params.find(','); comma != std::string_view::npos) {
            item = params.substr(0, comma);
            params = params.substr(comma + 1);
        } else {
            params = {};
        }
        const auto eq = item.find('=');
        if (eq == std::string_view::npos)
            throw ParseError("space descriptor: expected key=value, got '" +
                             std::string(item) + "'");
        const std::string_view key = item.substr(0, eq);
        const double val = parse_number(item.substr(eq + 1));
        if (key == "p") d.p = val;
        else if (key == "theta") d.theta = val;
        else if (key == "s") d.s = val;
        else throw ParseError("space descriptor: unknown key '" + std::string(key) + "'");
    }

    if (d.p < 1.0)
        throw ParseError("space descriptor: p must be >= 1, got " + fmt_param(d.p));
    if (d.theta <= 0.0 || d.theta >= 1.0)
        throw ParseError("space descriptor: theta must lie in (0,1), got " +
                         fmt_param(d.theta));
    if (d.s < 0.0 || d.s > 1.0)
        throw ParseError("space descriptor: s must lie in [0,1], got " + fmt_param(d.s));
    return d;
}

} // namespace basislab
