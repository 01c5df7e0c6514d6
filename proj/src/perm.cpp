#include "hg/perm.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hg/errors.hpp"

namespace hg {

Permutation::Permutation(int degree) {
    if (degree < 1) throw std::invalid_argument("permutation degree must be >= 1");
    images_.resize(static_cast<std::size_t>(degree));
    std::iota(images_.begin(), images_.end(), 0);
}

Permutation Permutation::from_images(std::vector<int> images) {
    if (images.empty()) throw std::invalid_argument("permutation degree must be >= 1");
    std::vector<char> seen(images.size(), 0);
    for (int v : images) {
        if (v < 0 || v >= static_cast<int>(images.size()))
            throw std::invalid_argument("image out of range");
        if (seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("image array is not a bijection");
        seen[static_cast<std::size_t>(v)] = 1;
    }
    return Permutation(std::move(images), Trusted{});
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (images_[static_cast<std::size_t>(i)] != i) return false;
    return true;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree())
        throw std::invalid_argument("compose: degree mismatch");
    std::vector<int> out(a.images_.size());
    for (std::size_t x = 0; x < out.size(); ++x)
        out[x] = a.images_[static_cast<std::size_t>(b.images_[x])];
    return Permutation(std::move(out), Permutation::Trusted{});
}

Permutation inverse(const Permutation& p) {
    std::vector<int> out(p.images_.size());
    for (std::size_t x = 0; x < out.size(); ++x)
        out[static_cast<std::size_t>(p.images_[x])] = static_cast<int>(x);
    return Permutation(std::move(out), Permutation::Trusted{});
}

std::int64_t perm_order(const Permutation& p) {
    std::int64_t ord = 1;
    for (const auto& cyc : cycle_decomposition(p))
        ord = std::lcm(ord, static_cast<std::int64_t>(cyc.size()));
    return ord;
}

std::pair<Permutation, std::int64_t> inverse_order(const Permutation& p) {
    return {inverse(p), perm_order(p)};
}

Permutation conjugate(const Permutation& by, const Permutation& p) {
    return compose(by, compose(p, inverse(by)));
}

std::vector<std::vector<int>> cycle_decomposition(const Permutation& p) {
    std::vector<std::vector<int>> cycles;
    std::vector<char> seen(static_cast<std::size_t>(p.degree()), 0);
    for (int i = 0; i < p.degree(); ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        std::vector<int> cyc{i};
        seen[static_cast<std::size_t>(i)] = 1;
        for (int j = p(i); j != i; j = p(j)) {
            seen[static_cast<std::size_t>(j)] = 1;
            cyc.push_back(j);
        }
        if (cyc.size() > 1) cycles.push_back(std::move(cyc));
    }
    return cycles;
}

Permutation parse_cycles(const std::string& text, int degree) {
    if (degree < 1) throw std::invalid_argument("parse_cycles: degree must be >= 1");
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 0);
    std::vector<char> used(static_cast<std::size_t>(degree), 0);

    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(')
            throw std::invalid_argument("parse_cycles: expected '(' near \"" + text.substr(i) + "\"");
        ++i;
        std::vector<int> cyc;
        for (;;) {
            skip_ws();
            if (i >= text.size())
                throw std::invalid_argument("parse_cycles: unterminated cycle");
            if (text[i] == ')') { ++i; break; }
            int value = 0;
            auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
            if (ec != std::errc() || ptr == text.data() + i)
                throw std::invalid_argument("parse_cycles: expected point label near \"" + text.substr(i) + "\"");
            i = static_cast<std::size_t>(ptr - text.data());
            if (value < 1 || value > degree)
                throw std::invalid_argument("parse_cycles: point " + std::to_string(value) +
                                            " out of range for degree " + std::to_string(degree));
            int pt = value - 1;
            if (used[static_cast<std::size_t>(pt)])
                throw std::invalid_argument("parse_cycles: point " + std::to_string(value) + " repeated");
            used[static_cast<std::size_t>(pt)] = 1;
            cyc.push_back(pt);
        }
        for (std::size_t k = 0; k < cyc.size(); ++k)
            images[static_cast<std::size_t>(cyc[k])] = cyc[(k + 1) % cyc.size()];
        skip_ws();
    }
    return Permutation::from_images(std::move(images));
}

std::string to_cycles(const Permutation& p) {
    auto cycles = cycle_decomposition(p);
    if (cycles.empty()) return "()";
    std::ostringstream out;
    for (const auto& cyc : cycles) {
        out << '(';
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            if (k) out << ' ';
            out << cyc[k] + 1;
        }
        out << ')';
    }
    return out.str();
}

PermSet::PermSet(int degree, std::vector<Permutation> elems)
    : degree_(degree), elems_(std::move(elems)) {
    if (degree_ < 1) throw std::invalid_argument("PermSet: degree must be >= 1");
    for (const auto& p : elems_)
        if (p.degree() != degree_)
            throw std::invalid_argument("PermSet: mixed degrees");
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

bool PermSet::contains(const Permutation& p) const {
    return std::binary_search(elems_.begin(), elems_.end(), p);
}

std::optional<int> PermSet::index_of(const Permutation& p) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), p);
    if (it == elems_.end() || *it != p) return std::nullopt;
    return static_cast<int>(it - elems_.begin());
}

PermSet generate_closure(const std::vector<Permutation>& gens, std::size_t cap) {
    if (gens.empty())
        throw std::invalid_argument("generate_closure: need at least one generator");
    int degree = gens[0].degree();
    for (const auto& g : gens)
        if (g.degree() != degree)
            throw std::invalid_argument("generate_closure: mixed degrees");

    std::set<Permutation> seen;
    std::queue<Permutation> todo;
    auto push = [&](Permutation p) {
        if (seen.insert(p).second) {
            if (seen.size() > cap)
                throw CapExceeded("generate_closure: closure exceeds cap of " + std::to_string(cap));
            todo.push(std::move(p));
        }
    };
    push(Permutation(degree));
    for (const auto& g : gens) push(g);
    while (!todo.empty()) {
        Permutation cur = std::move(todo.front());
        todo.pop();
        for (const auto& g : gens) {
            push(compose(cur, g));
            push(compose(g, cur));
        }
    }
    return PermSet(degree, std::vector<Permutation>(seen.begin(), seen.end()));
}

const char* to_string(RegularityClass c) {
    switch (c) {
        case RegularityClass::Regular: return "regular";
        case RegularityClass::TransitiveNotFree: return "transitive-not-free";
        case RegularityClass::FreeNotTransitive: return "free-not-transitive";
        case RegularityClass::Neither: return "neither";
    }
    return "?";
}

RegularityClass regularity_check(const PermSet& sub) {
    if (sub.size() == 0)
        throw std::invalid_argument("regularity_check: empty set");
    for (const auto& a : sub)
        for (const auto& b : sub)
            if (!sub.contains(compose(a, b)))
                throw std::invalid_argument("regularity_check: set is not closed under composition");

    const int degree = sub.degree();

    // Route 1: orbit of 0 + freeness.
    std::vector<char> orbit0(static_cast<std::size_t>(degree), 0);
    bool free = true;
    for (const auto& p : sub) {
        orbit0[static_cast<std::size_t>(p(0))] = 1;
        if (!p.is_identity())
            for (int x = 0; x < degree; ++x)
                if (p(x) == x) { free = false; break; }
    }
    // Transitivity of a *group* equals "orbit of 0 is everything".
    bool transitive = std::all_of(orbit0.begin(), orbit0.end(), [](char c) { return c != 0; });

    // Route 2: evaluation at the base point, eta -> eta(0).
    std::vector<char> hit(static_cast<std::size_t>(degree), 0);
    bool eval_injective = true;
    for (const auto& p : sub) {
        if (hit[static_cast<std::size_t>(p(0))]) eval_injective = false;
        hit[static_cast<std::size_t>(p(0))] = 1;
    }
    bool eval_bijective = eval_injective && sub.size() == static_cast<std::size_t>(degree);

    if (sub.size() == static_cast<std::size_t>(degree)) {
        if (eval_bijective != (transitive && free))
            throw ConsistencyError("regularity_check: evaluation route disagrees with orbit route");
    }

    if (transitive && free) return RegularityClass::Regular;
    if (transitive) return RegularityClass::TransitiveNotFree;
    if (free) return RegularityClass::FreeNotTransitive;
    return RegularityClass::Neither;
}

}  // namespace hg
