#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hg {

inline constexpr std::size_t kDefaultClosureCap = 20000;

// A permutation of {0, ..., degree-1}, stored as its image array.
// I/O uses 1-based cycle notation; everything internal is 0-based.
class Permutation {
public:
    explicit Permutation(int degree);  // identity
    static Permutation from_images(std::vector<int> images);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
    const std::vector<int>& images() const { return images_; }
    bool is_identity() const;

    friend bool operator==(const Permutation& a, const Permutation& b) = default;
    // Canonical order everywhere: lexicographic on image arrays.
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
        return a.images_ <=> b.images_;
    }

private:
    struct Trusted {};
    Permutation(std::vector<int> images, Trusted) : images_(std::move(images)) {}
    std::vector<int> images_;

    friend Permutation compose(const Permutation&, const Permutation&);
    friend Permutation inverse(const Permutation&);
};

// (a * b)(x) = a(b(x)): the right factor acts first.
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);
std::int64_t perm_order(const Permutation& p);
std::pair<Permutation, std::int64_t> inverse_order(const Permutation& p);

// by * p * by^-1
Permutation conjugate(const Permutation& by, const Permutation& p);

// Nontrivial cycles, each rotated to start at its smallest point, sorted by
// that point. The shape (sorted cycle lengths) is the conjugacy invariant.
std::vector<std::vector<int>> cycle_decomposition(const Permutation& p);

// "(1 2)(3 4 5)" style, 1-based. Empty string or "()" parses to the identity.
Permutation parse_cycles(const std::string& text, int degree);
std::string to_cycles(const Permutation& p);

// A canonically sorted, duplicate-free set of same-degree permutations.
class PermSet {
public:
    PermSet() : degree_(0) {}
    PermSet(int degree, std::vector<Permutation> elems);

    int degree() const { return degree_; }
    std::size_t size() const { return elems_.size(); }
    const Permutation& operator[](std::size_t i) const { return elems_[i]; }
    const std::vector<Permutation>& elements() const { return elems_; }
    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

    bool contains(const Permutation& p) const;
    // Position in canonical order, or nullopt.
    std::optional<int> index_of(const Permutation& p) const;

    friend bool operator==(const PermSet& a, const PermSet& b) = default;

private:
    int degree_;
    std::vector<Permutation> elems_;
};

// BFS closure under composition. Throws CapExceeded past `cap`.
PermSet generate_closure(const std::vector<Permutation>& gens,
                         std::size_t cap = kDefaultClosureCap);

enum class RegularityClass {
    Regular,             // transitive and free
    TransitiveNotFree,
    FreeNotTransitive,
    Neither,
};

const char* to_string(RegularityClass c);

// Classifies the action of a closed permutation set on its points.
// Requires `sub` closed under composition (i.e. a subgroup); throws otherwise.
// Internally cross-checks the evaluation map eta -> eta(0) against the
// transitive+free route and refuses to answer if they disagree.
RegularityClass regularity_check(const PermSet& sub);

}  // namespace hg
