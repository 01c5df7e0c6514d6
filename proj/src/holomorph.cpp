#include "hg/holomorph.hpp"

#include <algorithm>
#include <stdexcept>

#include "hg/errors.hpp"

namespace hg {

RegularRep regular_reps(const FiniteGroup& g) {
    const int n = g.order();
    std::vector<Permutation> lam, rho;
    lam.reserve(static_cast<std::size_t>(n));
    rho.reserve(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        std::vector<int> li(static_cast<std::size_t>(n)), ri(static_cast<std::size_t>(n));
        for (int x = 0; x < n; ++x) {
            li[static_cast<std::size_t>(x)] = g.mult(s, x);
            ri[static_cast<std::size_t>(x)] = g.mult(x, g.inv(s));
        }
        lam.push_back(Permutation::from_images(std::move(li)));
        rho.push_back(Permutation::from_images(std::move(ri)));
    }
    auto lam_img = FiniteGroup::from_elements(PermSet(n, lam), "lambda(" + g.label() + ")",
                                              /*verify_closure=*/false);
    auto rho_img = FiniteGroup::from_elements(PermSet(n, rho), "rho(" + g.label() + ")",
                                              /*verify_closure=*/false);
    return RegularRep{g, std::move(lam), std::move(rho), std::move(lam_img),
                      std::move(rho_img)};
}

Holomorph::Holomorph(FiniteGroup base, AutomorphismGroup aut)
    : base_(std::move(base)), aut_(std::move(aut)) {
    const int n = base_.order();
    const int A = aut_.group.order();
    if (aut_.group.degree() != n)
        throw std::invalid_argument("Holomorph: automorphisms must act on the base carrier");

    nmult_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    ninv_.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        ninv_[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(base_.inv(i));
        for (int j = 0; j < n; ++j)
            nmult_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                   static_cast<std::size_t>(j)] = static_cast<std::uint16_t>(base_.mult(i, j));
    }
    amult_.resize(static_cast<std::size_t>(A) * static_cast<std::size_t>(A));
    ainv_.resize(static_cast<std::size_t>(A));
    for (int i = 0; i < A; ++i) {
        ainv_[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(aut_.group.inv(i));
        for (int j = 0; j < A; ++j)
            amult_[static_cast<std::size_t>(i) * static_cast<std::size_t>(A) +
                   static_cast<std::size_t>(j)] = static_cast<std::uint16_t>(aut_.group.mult(i, j));
    }
    act_.resize(static_cast<std::size_t>(A) * static_cast<std::size_t>(n));
    for (int p = 0; p < A; ++p) {
        const Permutation& phi = aut_.group.element(p);
        for (int m = 0; m < n; ++m)
            act_[static_cast<std::size_t>(p) * static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(m)] = static_cast<std::uint16_t>(phi(m));
    }

    // rho(m) as a permutation of carrier indices: x -> x m^-1.
    std::vector<Permutation> rho;
    rho.reserve(static_cast<std::size_t>(n));
    for (int m = 0; m < n; ++m) {
        std::vector<int> images(static_cast<std::size_t>(n));
        for (int x = 0; x < n; ++x)
            images[static_cast<std::size_t>(x)] = base_.mult(x, base_.inv(m));
        rho.push_back(Permutation::from_images(std::move(images)));
    }

    std::vector<std::pair<Permutation, Tag>> elems;
    elems.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(A));
    for (int m = 0; m < n; ++m)
        for (int p = 0; p < A; ++p)
            elems.emplace_back(compose(rho[static_cast<std::size_t>(m)], aut_.group.element(p)),
                               Tag{static_cast<std::uint16_t>(m), static_cast<std::uint16_t>(p)});
    std::sort(elems.begin(), elems.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < elems.size(); ++i)
        if (elems[i].first == elems[i - 1].first)
            throw ConsistencyError("Holomorph: rho(m)*phi factorization is not unique");

    std::vector<Permutation> perms;
    perms.reserve(elems.size());
    tags_.reserve(elems.size());
    for (auto& [perm, tag] : elems) {
        perms.push_back(std::move(perm));
        tags_.push_back(tag);
    }
    group_ = FiniteGroup::from_elements(PermSet(n, std::move(perms)),
                                        "Hol(" + base_.label() + ")",
                                        /*verify_closure=*/false);
    if (group_.order() != n * A)
        throw ConsistencyError("Holomorph: order is not |N| * |Aut N|");

    tag_to_index_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(A), -1);
    for (std::size_t i = 0; i < tags_.size(); ++i)
        tag_to_index_[tag_id(tags_[i])] = static_cast<int>(i);
}

Holomorph holomorph(const FiniteGroup& n, const RunConfig& cfg) {
    auto aut = automorphism_group(n, cfg);
    std::size_t order = static_cast<std::size_t>(n.order()) *
                        static_cast<std::size_t>(aut.group.order());
    if (order > cfg.closure_cap)
        throw CapExceeded("holomorph: order " + std::to_string(order) + " exceeds cap " +
                          std::to_string(cfg.closure_cap));
    return Holomorph(n, std::move(aut));
}

}  // namespace hg
