#pragma once

#include <cstdint>
#include <vector>

#include "hg/config.hpp"
#include "hg/group.hpp"

namespace hg {

// Left translation x -> s x and right translation x -> x s^-1 of a group on
// its own carrier indices. Both are regular; their images centralize each
// other inside Perm(carrier).
struct RegularRep {
    FiniteGroup source;
    std::vector<Permutation> lambda_of;  // per element index
    std::vector<Permutation> rho_of;
    FiniteGroup lambda_image;
    FiniteGroup rho_image;
};

RegularRep regular_reps(const FiniteGroup& g);

// Hol(N) acting on N's carrier indices: every element factors uniquely as
// rho(m) * phi with m in N and phi in Aut(N), and products reduce to small
// table lookups on those tags:
//   (m1, p1)(m2, p2) = (m1 * p1(m2), p1 p2).
// The base point is index 0 (the identity of N, which sorts first), and
// (m, p) sends it to m^-1, so tag enumeration never touches permutations.
class Holomorph {
public:
    struct Tag {
        std::uint16_t m, phi;
        friend bool operator==(Tag a, Tag b) = default;
    };

    Holomorph(FiniteGroup base, AutomorphismGroup aut);

    const FiniteGroup& base() const { return base_; }
    const FiniteGroup& aut_group() const { return aut_.group; }
    const AutomorphismGroup& aut() const { return aut_; }
    const FiniteGroup& group() const { return group_; }

    int n() const { return base_.order(); }
    int aut_order() const { return aut_.group.order(); }

    Tag tag_of(int carrier_index) const {
        return tags_[static_cast<std::size_t>(carrier_index)];
    }
    int carrier_index_of(Tag t) const {
        return tag_to_index_[tag_id(t)];
    }
    std::uint32_t tag_id(Tag t) const {
        return static_cast<std::uint32_t>(t.m) * static_cast<std::uint32_t>(aut_order()) + t.phi;
    }
    Tag tag_from_id(std::uint32_t id) const {
        return Tag{static_cast<std::uint16_t>(id / static_cast<std::uint32_t>(aut_order())),
                   static_cast<std::uint16_t>(id % static_cast<std::uint32_t>(aut_order()))};
    }

    Tag mul(Tag a, Tag b) const {
        return Tag{nmult(a.m, act(a.phi, b.m)), amult(a.phi, b.phi)};
    }
    Tag inv(Tag t) const {
        std::uint16_t pi = ainv_[t.phi];
        return Tag{act(pi, ninv_[t.m]), pi};
    }
    // Image of the base point under rho(m) * phi: phi(e) m^-1 = m^-1.
    int xi_point(Tag t) const { return ninv_[t.m]; }
    // Element of N whose xi-point is x, i.e. the forced m covering x.
    std::uint16_t m_covering(int x) const { return ninv_[static_cast<std::size_t>(x)]; }

    std::uint16_t nmult(int i, int j) const {
        return nmult_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n()) +
                      static_cast<std::size_t>(j)];
    }
    std::uint16_t amult(int i, int j) const {
        return amult_[static_cast<std::size_t>(i) * static_cast<std::size_t>(aut_order()) +
                      static_cast<std::size_t>(j)];
    }
    std::uint16_t act(int phi, int m) const {
        return act_[static_cast<std::size_t>(phi) * static_cast<std::size_t>(n()) +
                    static_cast<std::size_t>(m)];
    }

private:
    FiniteGroup base_;
    AutomorphismGroup aut_;
    FiniteGroup group_;
    std::vector<Tag> tags_;            // aligned with group_'s carrier order
    std::vector<int> tag_to_index_;
    std::vector<std::uint16_t> nmult_, amult_, act_, ninv_, ainv_;
};

// Builds Aut(N) under cfg bounds and assembles Hol(N).
Holomorph holomorph(const FiniteGroup& n, const RunConfig& cfg = {});

}  // namespace hg
