#pragma once
// Electron configurations of an N-site chain and fermionic creation and
// annihilation with exact sign bookkeeping.
//
// A configuration is the word f(1)...f(N) over {E, U, D, B} standing for an
// empty site, a spin-up electron, a spin-down electron and a doubly occupied
// site. The canonical Fock state attached to a configuration is site-major:
//
//   |f> = prod_{j=1..N} (c+_{j,up})^{n(j,up)} (c+_{j,dn})^{n(j,dn)} |0>,
//
// so the mode order is (1,up),(1,dn),(2,up),(2,dn),...  Under this ordering
// the on-site spin-flip and pair operators carry no fermionic phase, which
// the symmetry-adapted bases downstream rely on.

#include <hubswd/common.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hubswd {

enum class Letter : std::uint8_t { E = 0, U = 1, D = 2, B = 3 };
enum class Spin : std::uint8_t { up = 0, down = 1 };

// Textual alphabet {0, u, d, 2} used by the CLI and JSON output.
char letter_char(Letter l);
Letter letter_from_char(char c);

class Configuration {
public:
    Configuration() = default;
    explicit Configuration(int n);  // all sites empty
    static Configuration from_letters(const std::vector<Letter>& letters);
    static Configuration from_literal(const std::string& text);

    int sites() const { return n_; }
    Letter at(int site) const;  // 1-based
    Configuration with(int site, Letter l) const;
    bool occupied(int site, Spin s) const;

    int count(Letter l) const;
    int n_plus() const;
    int n_minus() const;
    int electrons() const { return n_plus() + n_minus(); }

    std::string literal() const;
    std::uint64_t packed() const { return word_; }

    // Integer order on the packed word equals lexicographic order on the
    // letters with E < U < D < B.
    friend bool operator<(const Configuration& a, const Configuration& b) {
        return a.word_ < b.word_;
    }
    friend bool operator==(const Configuration& a, const Configuration& b) {
        return a.n_ == b.n_ && a.word_ == b.word_;
    }

private:
    std::uint64_t word_ = 0;  // 2 bits per site, site 1 in the highest field
    int n_ = 0;

    int mode_bit(int site, Spin s) const;
    friend struct FockState;
};

// Counts (#U, #D, #B, #E), the weight of the configuration.
std::array<int, 4> weight(const Configuration& config);

// A configuration together with the global site-major ordering convention.
struct FockState {
    Configuration config;

    friend bool operator==(const FockState& a, const FockState& b) {
        return a.config == b.config;
    }
};

struct Sector {
    int n_plus = 0;
    int n_minus = 0;

    friend bool operator==(const Sector&, const Sector&) = default;
};

// Result of applying a single fermionic operator: parity sign and new state,
// or nothing when the operator annihilates the state.
using Applied = std::optional<std::pair<int, FockState>>;

Applied apply_creation(const FockState& state, int site, Spin spin);
Applied apply_annihilation(const FockState& state, int site, Spin spin);

class Basis {
public:
    Basis() = default;
    Basis(int n, std::vector<Configuration> configs, std::string tag);

    int size() const { return static_cast<int>(configs_.size()); }
    int sites() const { return n_; }
    const Configuration& at(int i) const { return configs_[i]; }
    const std::vector<Configuration>& configs() const { return configs_; }
    int index_of(const Configuration& c) const;  // -1 when absent
    const std::string& tag() const { return tag_; }

private:
    int n_ = 0;
    std::vector<Configuration> configs_;
    std::unordered_map<std::uint64_t, int> index_;
    std::string tag_;
};

// All 4^n configurations in lexicographic order.
Basis enumerate_basis(int n);
// The (n_plus, n_minus) sector, lexicographic order.
Basis enumerate_basis(int n, Sector sector);
// All sectors with a fixed electron count, n_plus descending, then
// lexicographic within each sector.
Basis enumerate_ne_basis(int n, int ne);

}  // namespace hubswd
