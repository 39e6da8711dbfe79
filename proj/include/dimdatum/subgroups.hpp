#pragma once

// Closed subgroups H presented through the conjugacy-class distribution of
// their Haar measure, and exact invariant dimensions dim V^H.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "cyclotomic.hpp"
#include "error.hpp"
#include "irreps.hpp"
#include "lattice.hpp"
#include "root_datum.hpp"
#include "weyl_group.hpp"

namespace dimdatum {

/// Haar mass concentrated on the conjugacy class of a torus element.
struct PointAtom {
    TorusElement element;
    Rational mass;
};

/// Haar mass spread over offset * S for a subtorus S, where S is cut out by
/// `embedding` (rows map G-weights to S-weights).
struct TorusPiece {
    IntMatrix embedding;
    TorusElement offset;
    Rational mass;
};

using MeasurePiece = std::variant<PointAtom, TorusPiece>;

inline const Rational &piece_mass(const MeasurePiece &p) {
    return std::visit([](const auto &x) -> const Rational & { return x.mass; }, p);
}

struct ClassMeasure {
    std::vector<MeasurePiece> pieces;
    std::int64_t component_count = 1; // |H / H_0|, or |H| for finite H

    Rational total_mass() const {
        Rational s = 0;
        for (const auto &p : pieces)
            s += piece_mass(p);
        return s;
    }
};

struct FiniteClasses {
    ClassMeasure measure;
};

/// A subtorus, optionally extended by finitely many cosets to a quasi-torus.
/// The identity component carries 1 - (sum of coset masses).
struct Subtorus {
    IntMatrix embedding;
    std::vector<MeasurePiece> cosets;
};

/// Connected subgroup given by its own root datum and the linear map
/// `restriction` from G-weight coordinates to H-weight coordinates.
struct ConnectedEmbedding {
    RootDatum h_datum;
    IntMatrix restriction;
};

struct SubgroupDescriptor {
    std::string name;
    std::variant<FiniteClasses, Subtorus, ConnectedEmbedding> kind;
};

inline ClassMeasure class_measure(const Subtorus &s, std::size_t rank) {
    ClassMeasure m;
    Rational rest = 1;
    for (const auto &c : s.cosets)
        rest -= piece_mass(c);
    m.pieces.push_back(TorusPiece{s.embedding, TorusElement::identity(rank), rest});
    m.pieces.insert(m.pieces.end(), s.cosets.begin(), s.cosets.end());
    m.component_count = static_cast<std::int64_t>(s.cosets.size()) + 1;
    return m;
}

namespace detail {

inline void validate_embedding(const IntMatrix &e, std::size_t rank, const std::string &what) {
    for (const auto &row : e)
        if (row.size() != rank)
            throw InputError(what + ": embedding row length " + std::to_string(row.size()) + " != group rank " +
                             std::to_string(rank));
    if (integer_rank(e, rank) != e.size())
        throw InputError(what + ": embedding matrix does not have full row rank");
}

inline void validate_measure(const ClassMeasure &m, std::size_t rank, const std::string &what) {
    if (m.pieces.empty())
        throw InputError(what + ": empty class measure");
    for (const auto &p : m.pieces) {
        if (piece_mass(p) <= 0)
            throw InputError(what + ": class masses must be positive");
        if (const auto *a = std::get_if<PointAtom>(&p)) {
            if (a->element.rank() != rank)
                throw InputError(what + ": atom has " + std::to_string(a->element.rank()) + " angles, group rank is " +
                                 std::to_string(rank));
        } else {
            const auto &t = std::get<TorusPiece>(p);
            if (t.offset.rank() != rank)
                throw InputError(what + ": coset offset has wrong length");
            validate_embedding(t.embedding, rank, what);
        }
    }
    if (m.total_mass() != 1)
        throw InputError(what + ": class masses sum to " + to_string(m.total_mass()) + ", not 1");
    if (m.component_count < 1)
        throw InputError(what + ": component count must be positive");
}

} // namespace detail

/// Structural checks of a descriptor against the ambient group.
inline void validate_subgroup(const RootDatum &datum, const SubgroupDescriptor &h) {
    const std::string what = "subgroup '" + h.name + "'";
    const std::size_t rank = datum.rank();
    if (const auto *f = std::get_if<FiniteClasses>(&h.kind)) {
        detail::validate_measure(f->measure, rank, what);
        for (const auto &p : f->measure.pieces) {
            if (!std::holds_alternative<PointAtom>(p))
                throw InputError(what + ": finite class data may only contain point atoms");
            const Rational size = piece_mass(p) * Rational(f->measure.component_count);
            if (!is_integer(size))
                throw InputError(what + ": class mass " + to_string(piece_mass(p)) +
                                 " is not a class size over the group order " +
                                 std::to_string(f->measure.component_count));
        }
    } else if (const auto *s = std::get_if<Subtorus>(&h.kind)) {
        detail::validate_embedding(s->embedding, rank, what);
        Rational coset_mass = 0;
        for (const auto &c : s->cosets)
            coset_mass += piece_mass(c);
        if (coset_mass >= 1)
            throw InputError(what + ": coset masses leave no mass for the identity component");
        detail::validate_measure(class_measure(*s, rank), rank, what);
    } else {
        const auto &c = std::get<ConnectedEmbedding>(h.kind);
        if (c.restriction.size() != c.h_datum.rank())
            throw InputError(what + ": restriction must have one row per H-weight coordinate");
        for (const auto &row : c.restriction)
            if (row.size() != rank)
                throw InputError(what + ": restriction row length must equal the group rank");
    }
}

/// Pushforward of a weight multiset along an integer linear map.
inline WeightMultiset restrict_weights(const WeightMultiset &weights, const IntMatrix &restriction) {
    WeightMultiset out;
    for (const auto &[mu, m] : weights.entries) {
        Weight nu(restriction.size(), 0);
        for (std::size_t i = 0; i < restriction.size(); ++i)
            for (std::size_t j = 0; j < mu.size(); ++j)
                nu[i] += restriction[i][j] * mu[j];
        out.entries[nu] += m;
    }
    return out;
}

namespace detail {

inline bool kills(const IntMatrix &embedding, const Weight &mu) {
    for (const auto &row : embedding) {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < mu.size(); ++j)
            s += row[j] * mu[j];
        if (s != 0)
            return false;
    }
    return true;
}

inline std::int64_t checked_dimension(const Rational &value, const DominantWeight &lambda,
                                      const SubgroupDescriptor &h) {
    if (!is_integer(value) || value < 0)
        throw ConsistencyError("subgroup '" + h.name + "': invariant dimension at " + weight_label(lambda.coords) +
                               " reduced to " + to_string(value) + ", not a nonnegative integer");
    return to_int64(numerator(value));
}

inline std::int64_t measure_invariant_dim(const RootDatum &datum, const DominantWeight &lambda,
                                          const ClassMeasure &measure, const SubgroupDescriptor &h) {
    std::int64_t n = 1;
    for (const auto &p : measure.pieces) {
        if (const auto *a = std::get_if<PointAtom>(&p))
            n = lcm64(n, a->element.order());
        else
            n = lcm64(n, std::get<TorusPiece>(p).offset.order());
    }
    const auto weights = freudenthal_multiplicities(datum, lambda);
    std::vector<Rational> coeffs(static_cast<std::size_t>(n), Rational(0));
    for (const auto &p : measure.pieces) {
        std::vector<std::int64_t> counts(static_cast<std::size_t>(n), 0);
        if (const auto *a = std::get_if<PointAtom>(&p)) {
            counts = character_exponent_counts(*weights, a->element, n);
        } else {
            const auto &t = std::get<TorusPiece>(p);
            const Weight scaled = t.offset.scaled_angles(n);
            for (const auto &[mu, m] : weights->entries)
                if (kills(t.embedding, mu))
                    counts[static_cast<std::size_t>(pairing_exponent(mu, scaled, n))] += m;
        }
        const Rational &mass = piece_mass(p);
        for (std::size_t k = 0; k < counts.size(); ++k)
            if (counts[k] != 0)
                coeffs[k] += mass * Rational(counts[k]);
    }
    const CyclotomicNumber total = CyclotomicNumber::from_group_ring(n, coeffs);
    if (!total.is_rational())
        throw ConsistencyError("subgroup '" + h.name + "': average at " + weight_label(lambda.coords) +
                               " is not rational: " + total.to_string());
    return checked_dimension(total.rational_value(), lambda, h);
}

inline std::int64_t connected_invariant_dim(const RootDatum &datum, const DominantWeight &lambda,
                                            const ConnectedEmbedding &c, const SubgroupDescriptor &h) {
    const auto weights = freudenthal_multiplicities(datum, lambda);
    const WeightMultiset restricted = restrict_weights(*weights, c.restriction);
    const RootDatum &hd = c.h_datum;
    for (const auto &[nu, m] : restricted.entries)
        for (std::size_t i = 0; i < hd.simple_roots().size(); ++i)
            if (restricted.multiplicity(hd.reflect(nu, i)) != m)
                throw ConsistencyError("subgroup '" + h.name + "': restriction of " + weight_label(lambda.coords) +
                                       " is not invariant under the Weyl group of H");
    // trivial multiplicity = sum_w sign(w) m(rho_H - w rho_H)
    const auto wh = cached_weyl_group(hd);
    std::int64_t total = 0;
    for (const auto &w : wh->elements()) {
        Weight image = WeylGroup::apply(w, hd.rho());
        Weight shift(hd.rank());
        for (std::size_t i = 0; i < hd.rank(); ++i)
            shift[i] = hd.rho()[i] - image[i];
        total += w.sign * restricted.multiplicity(shift);
    }
    return checked_dimension(Rational(total), lambda, h);
}

} // namespace detail

/// dim V_lambda^H, exact. Throws ConsistencyError if the computation does
/// not reduce to a nonnegative integer.
inline std::int64_t invariant_dim(const RootDatum &datum, const DominantWeight &lambda, const SubgroupDescriptor &h) {
    check_dominant(datum, lambda);
    if (const auto *f = std::get_if<FiniteClasses>(&h.kind))
        return detail::measure_invariant_dim(datum, lambda, f->measure, h);
    if (const auto *s = std::get_if<Subtorus>(&h.kind))
        return detail::measure_invariant_dim(datum, lambda, class_measure(*s, datum.rank()), h);
    return detail::connected_invariant_dim(datum, lambda, std::get<ConnectedEmbedding>(h.kind), h);
}

/// Characters of G that restrict trivially to the subtorus.
inline CharacterLattice kernel_character_lattice(const RootDatum &datum, const Subtorus &h) {
    if (!h.cosets.empty())
        throw InputError("kernel lattice is defined for a subtorus without cosets");
    detail::validate_embedding(h.embedding, datum.rank(), "subtorus");
    return CharacterLattice(integer_kernel(h.embedding, datum.rank()), datum.rank());
}

} // namespace dimdatum
