#include <hubswd/translation.hpp>

#include <cmath>
#include <numbers>
#include <unordered_set>

namespace hubswd {

BrillouinZone brillouin_zone(int n) {
    if (n < 1) throw UsageError("site count must be at least 1");
    BrillouinZone bz{n, {0}};
    for (int k = 1; k <= (n - 1) / 2; ++k) {
        bz.momenta.push_back(k);
        bz.momenta.push_back(-k);
    }
    if (n % 2 == 0) bz.momenta.push_back(n / 2);
    return bz;
}

Configuration translate_letters(const Configuration& c) {
    int n = c.sites();
    Configuration out(n);
    for (int j = 1; j <= n; ++j) out = out.with(j % n + 1, c.at(j));
    return out;
}

std::vector<Configuration> CyclicOrbit::elements() const {
    std::vector<Configuration> el{representative};
    for (int i = 1; i < period; ++i) el.push_back(translate_letters(el.back()));
    return el;
}

std::vector<CyclicOrbit> orbits(int n, Sector sector) {
    Basis basis = enumerate_basis(n, sector);
    std::vector<CyclicOrbit> out;
    std::unordered_set<std::uint64_t> seen;
    for (const auto& c : basis.configs()) {
        if (seen.count(c.packed())) continue;
        // lexicographic enumeration meets each orbit at its minimum first
        CyclicOrbit orbit{c, 0, 0};
        Configuration cur = c;
        do {
            seen.insert(cur.packed());
            cur = translate_letters(cur);
            orbit.period++;
        } while (!(cur == c));
        orbit.kappa = n / orbit.period;
        out.push_back(orbit);
    }
    return out;
}

std::vector<int> rarefied_zone(int n, int kappa) {
    if (kappa < 1 || n % kappa != 0)
        throw UsageError("rarefaction index must divide the site count");
    std::vector<int> out;
    for (int k : brillouin_zone(n).momenta)
        if (k % kappa == 0) out.push_back(k);
    return out;
}

std::vector<Wavelet> wavelet_basis(const CyclicOrbit& orbit) {
    int n = orbit.representative.sites();
    std::vector<Wavelet> out;
    for (int k : rarefied_zone(n, orbit.kappa)) {
        Wavelet w{orbit, k, {}};
        w.coeffs.reserve(orbit.period);
        for (int j = 0; j < orbit.period; ++j) {
            double phase = 2.0 * std::numbers::pi * k * j / n;
            w.coeffs.emplace_back(std::cos(phase) / std::sqrt(orbit.period),
                                  std::sin(phase) / std::sqrt(orbit.period));
        }
        out.push_back(std::move(w));
    }
    return out;
}

}  // namespace hubswd
