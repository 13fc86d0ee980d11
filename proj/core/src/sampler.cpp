#include "basislab/sampler.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "basislab/errors.hpp"

namespace basislab {

std::string SamplerSpec::text() const {
    char buf[48];
    switch (kind) {
        case Kind::Gaussian: return "gaussian";
        case Kind::RademacherSparse:
            std::snprintf(buf, sizeof(buf), "rademacher_sparse:k=%d", k);
            return buf;
        case Kind::Geometric:
            std::snprintf(buf, sizeof(buf), "geometric:r=%g", r);
            return buf;
        case Kind::IndicatorRandom: return "indicator_random";
    }
    return "?";
}

SamplerSpec parse_sampler(std::string_view text) {
    std::string_view head = text;
    std::string_view params;
    if (auto colon = text.find(':'); colon != std::string_view::npos) {
        head = text.substr(0, colon);
        params = text.substr(colon + 1);
    }
    SamplerSpec s;
    if (head == "gaussian") s.kind = SamplerSpec::Kind::Gaussian;
    else if (head == "rademacher_sparse") s.kind = SamplerSpec::Kind::RademacherSparse;
    else if (head == "geometric") s.kind = SamplerSpec::Kind::Geometric;
    else if (head == "indicator_random") s.kind = SamplerSpec::Kind::IndicatorRandom;
    else throw ParseError("sampler spec: unknown kind '" + std::string(head) + "'");

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
            throw ParseError("sampler spec: expected key=value, got '" + std::string(item) + "'");
        const std::string_view key = item.substr(0, eq);
        const std::string_view val = item.substr(eq + 1);
        double v = 0.0;
        auto [p, ec] = std::from_chars(val.data(), val.data() + val.size(), v);
        if (ec != std::errc() || p != val.data() + val.size())
            throw ParseError("sampler spec: bad numeric value '" + std::string(val) + "'");
        if (key == "k") s.k = static_cast<int>(v);
        else if (key == "r") s.r = v;
        else throw ParseError("sampler spec: unknown key '" + std::string(key) + "'");
    }
    if (s.k < 1) throw ParseError("sampler spec: k must be >= 1");
    if (s.r <= 0.0 || s.r >= 1.0) throw ParseError("sampler spec: r must lie in (0,1)");
    return s;
}

FiniteVector Sampler::draw(Rng& rng, int max_len) const {
    const int len = rng.uniform_int(1, std::max(1, max_len));
    std::vector<double> c(static_cast<std::size_t>(len), 0.0);
    switch (spec_.kind) {
        case SamplerSpec::Kind::Gaussian:
            for (double& x : c) x = rng.normal();
            break;
        case SamplerSpec::Kind::RademacherSparse: {
            const int nz = std::min(spec_.k, len);
            for (int t = 0; t < nz; ++t) {
                int pos = rng.uniform_int(0, len - 1);
                c[static_cast<std::size_t>(pos)] = static_cast<double>(rng.sign());
            }
            break;
        }
        case SamplerSpec::Kind::Geometric: {
            double mag = 1.0;
            for (double& x : c) {
                x = static_cast<double>(rng.sign()) * mag;
                mag *= spec_.r;
            }
            break;
        }
        case SamplerSpec::Kind::IndicatorRandom:
            for (double& x : c) x = (rng.next_u64() & 1u) ? 1.0 : 0.0;
            break;
    }
    return FiniteVector(std::move(c));
}

FiniteVector Sampler::draw_nonzero(Rng& rng, int max_len) const {
    for (;;) {
        FiniteVector v = draw(rng, max_len);
        if (!v.is_zero()) return v;
    }
}

} // namespace basislab
