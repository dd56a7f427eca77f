#include <hubswd/fock.hpp>

#include <algorithm>
#include <bit>

namespace hubswd {

char letter_char(Letter l) {
    switch (l) {
        case Letter::E: return '0';
        case Letter::U: return 'u';
        case Letter::D: return 'd';
        case Letter::B: return '2';
    }
    throw InvariantError("invalid letter");
}

Letter letter_from_char(char c) {
    switch (c) {
        case '0': return Letter::E;
        case 'u': return Letter::U;
        case 'd': return Letter::D;
        case '2': return Letter::B;
    }
    throw UsageError(std::string("invalid configuration character '") + c +
                     "', expected one of {0,u,d,2}");
}

Configuration::Configuration(int n) : n_(n) {
    if (n < 1 || n > 31) throw UsageError("site count must be between 1 and 31");
}

Configuration Configuration::from_letters(const std::vector<Letter>& letters) {
    Configuration c(static_cast<int>(letters.size()));
    for (int j = 1; j <= c.n_; ++j)
        c.word_ |= static_cast<std::uint64_t>(letters[j - 1]) << (2 * (c.n_ - j));
    return c;
}

Configuration Configuration::from_literal(const std::string& text) {
    std::vector<Letter> letters;
    letters.reserve(text.size());
    for (char ch : text) letters.push_back(letter_from_char(ch));
    return from_letters(letters);
}

Letter Configuration::at(int site) const {
    if (site < 1 || site > n_) throw UsageError("site index out of range");
    return static_cast<Letter>((word_ >> (2 * (n_ - site))) & 3u);
}

Configuration Configuration::with(int site, Letter l) const {
    if (site < 1 || site > n_) throw UsageError("site index out of range");
    Configuration c = *this;
    int shift = 2 * (n_ - site);
    c.word_ = (word_ & ~(std::uint64_t(3) << shift)) |
              (static_cast<std::uint64_t>(l) << shift);
    return c;
}

int Configuration::mode_bit(int site, Spin s) const {
    return 2 * (n_ - site) + (s == Spin::up ? 0 : 1);
}

bool Configuration::occupied(int site, Spin s) const {
    if (site < 1 || site > n_) throw UsageError("site index out of range");
    return (word_ >> mode_bit(site, s)) & 1u;
}

int Configuration::count(Letter l) const {
    int c = 0;
    for (int j = 1; j <= n_; ++j) c += at(j) == l;
    return c;
}

int Configuration::n_plus() const {
    std::uint64_t up_bits = word_ & 0x5555555555555555ull;
    return std::popcount(up_bits);
}

int Configuration::n_minus() const {
    std::uint64_t dn_bits = word_ & 0xAAAAAAAAAAAAAAAAull;
    return std::popcount(dn_bits);
}

std::string Configuration::literal() const {
    std::string s;
    s.reserve(n_);
    for (int j = 1; j <= n_; ++j) s.push_back(letter_char(at(j)));
    return s;
}

std::array<int, 4> weight(const Configuration& config) {
    return {config.count(Letter::U), config.count(Letter::D),
            config.count(Letter::B), config.count(Letter::E)};
}

namespace {

// Parity of the number of occupied modes strictly before (site, spin) in the
// site-major mode order. The same count serves creation and annihilation,
// which makes the two matrices exact transposes of one another.
int mode_sign(const Configuration& c, int site, Spin s) {
    int n = c.sites();
    std::uint64_t mask = 0;
    int above = 2 * (n - site) + 2;  // bits of sites 1..site-1
    if (above < 64) mask = ~std::uint64_t(0) << above;
    if (s == Spin::down) mask |= std::uint64_t(1) << (2 * (n - site));
    return (std::popcount(c.packed() & mask) & 1) ? -1 : 1;
}

}  // namespace

Applied apply_creation(const FockState& state, int site, Spin spin) {
    const Configuration& c = state.config;
    if (site < 1 || site > c.sites()) throw UsageError("site index out of range");
    if (c.occupied(site, spin)) return std::nullopt;
    Letter l = c.at(site);
    Letter set = static_cast<Letter>(static_cast<int>(l) |
                                     (spin == Spin::up ? 1 : 2));
    return std::make_pair(mode_sign(c, site, spin), FockState{c.with(site, set)});
}

Applied apply_annihilation(const FockState& state, int site, Spin spin) {
    const Configuration& c = state.config;
    if (site < 1 || site > c.sites()) throw UsageError("site index out of range");
    if (!c.occupied(site, spin)) return std::nullopt;
    Letter l = c.at(site);
    Letter cleared = static_cast<Letter>(static_cast<int>(l) &
                                         ~(spin == Spin::up ? 1 : 2));
    return std::make_pair(mode_sign(c, site, spin), FockState{c.with(site, cleared)});
}

Basis::Basis(int n, std::vector<Configuration> configs, std::string tag)
    : n_(n), configs_(std::move(configs)), tag_(std::move(tag)) {
    index_.reserve(configs_.size());
    for (int i = 0; i < size(); ++i) {
        auto [it, fresh] = index_.emplace(configs_[i].packed(), i);
        (void)it;
        if (!fresh) throw InvariantError("duplicate configuration in basis");
    }
}

int Basis::index_of(const Configuration& c) const {
    auto it = index_.find(c.packed());
    return it == index_.end() ? -1 : it->second;
}

namespace {

void enumerate_sector_rec(int n, int site, int np_left, int nm_left,
                          Configuration word, std::vector<Configuration>& out) {
    int remaining = n - site + 1;
    if (np_left < 0 || nm_left < 0 || np_left > remaining || nm_left > remaining)
        return;
    if (site > n) {
        out.push_back(word);
        return;
    }
    // Letter value order E < U < D < B keeps the output lexicographic.
    enumerate_sector_rec(n, site + 1, np_left, nm_left, word, out);
    enumerate_sector_rec(n, site + 1, np_left - 1, nm_left,
                         word.with(site, Letter::U), out);
    enumerate_sector_rec(n, site + 1, np_left, nm_left - 1,
                         word.with(site, Letter::D), out);
    enumerate_sector_rec(n, site + 1, np_left - 1, nm_left - 1,
                         word.with(site, Letter::B), out);
}

}  // namespace

Basis enumerate_basis(int n) {
    if (n < 1) throw UsageError("site count must be at least 1");
    if (n > 14) throw UsageError("full-space enumeration is limited to n <= 14");
    std::vector<Configuration> configs;
    configs.reserve(std::size_t(1) << (2 * n));
    std::vector<Letter> letters(n);
    for (std::uint64_t w = 0; w < (std::uint64_t(1) << (2 * n)); ++w) {
        for (int j = 0; j < n; ++j)
            letters[j] = static_cast<Letter>((w >> (2 * (n - 1 - j))) & 3u);
        configs.push_back(Configuration::from_letters(letters));
    }
    return Basis(n, std::move(configs), "full:n=" + std::to_string(n));
}

Basis enumerate_basis(int n, Sector sector) {
    if (n < 1) throw UsageError("site count must be at least 1");
    if (sector.n_plus < 0 || sector.n_plus > n || sector.n_minus < 0 ||
        sector.n_minus > n)
        throw UsageError("sector occupation numbers must lie in [0, n]");
    std::vector<Configuration> configs;
    enumerate_sector_rec(n, 1, sector.n_plus, sector.n_minus, Configuration(n),
                         configs);
    return Basis(n, std::move(configs),
                 "sector:n=" + std::to_string(n) +
                     ",np=" + std::to_string(sector.n_plus) +
                     ",nm=" + std::to_string(sector.n_minus));
}

Basis enumerate_ne_basis(int n, int ne) {
    if (ne < 0 || ne > 2 * n) throw UsageError("electron count must lie in [0, 2n]");
    std::vector<Configuration> configs;
    for (int np = std::min(n, ne); np >= 0; --np) {
        int nm = ne - np;
        if (nm < 0 || nm > n) continue;
        Basis sec = enumerate_basis(n, Sector{np, nm});
        configs.insert(configs.end(), sec.configs().begin(), sec.configs().end());
    }
    return Basis(n, std::move(configs),
                 "ne:n=" + std::to_string(n) + ",ne=" + std::to_string(ne));
}

}  // namespace hubswd
