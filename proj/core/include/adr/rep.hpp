#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adr/matrix.hpp"

namespace adr {

// A based algebra acts on its right modules through a finite set of slot-to-slot
// operators: the arrows of a quiver algebra, or a radical basis of a concrete
// endomorphism algebra. Everything downstream (hom spaces, radicals, socles,
// quotients, Krull-Schmidt splitting) only sees this shape.
struct OpEdge {
    int from = 0;
    int to = 0;
};

struct Ops {
    PrimeField field;
    int slots = 0;
    std::vector<OpEdge> edges;
};

// A representation: one F_p-space per slot, one matrix per operator.
// act[e] has shape dims[edges[e].to] x dims[edges[e].from].
struct Rep {
    std::vector<int> dims;
    std::vector<Matrix> act;

    int total_dim() const;
    bool is_zero() const { return total_dim() == 0; }
};

Rep zero_rep(const Ops& ops);
Rep direct_sum(const Ops& ops, const std::vector<const Rep*>& parts);
bool same_dims(const Rep& a, const Rep& b);

// A module map as per-slot matrices (target_dim x source_dim each).
struct MapTo {
    std::vector<Matrix> f;
};

MapTo zero_map(const Ops& ops, const Rep& x, const Rep& y);
MapTo compose(const MapTo& g, const MapTo& f);  // g after f, slotwise
bool is_module_map(const Ops& ops, const Rep& x, const Rep& y, const MapTo& f);
bool is_surjective(const Rep& y, const MapTo& f);
bool is_injective(const Rep& x, const MapTo& f);
bool map_invertible(const Rep& x, const Rep& y, const MapTo& f);

// Per-slot subspaces of a representation.
struct SubSpaces {
    std::vector<ColSpace> slot;
    int total_dim() const;
};

SubSpaces zero_sub(const Ops& ops, const Rep& m);
SubSpaces full_sub(const Ops& ops, const Rep& m);
bool is_submodule(const Ops& ops, const Rep& m, const SubSpaces& s);

// Close seed vectors under all operators.
SubSpaces closure(const Ops& ops, const Rep& m, const std::vector<std::pair<int, std::vector<uint32_t>>>& seeds);

// m J = sum of operator images; soc m = joint kernel of all operators.
SubSpaces radical_sub(const Ops& ops, const Rep& m);
SubSpaces socle_sub(const Ops& ops, const Rep& m);
SubSpaces radical_power_sub(const Ops& ops, const Rep& m, int k);

struct QuotientRep {
    Rep rep;
    MapTo proj;     // parent -> quotient
    MapTo section;  // k-linear section: quotient -> parent, proj . section = id
};
QuotientRep quotient(const Ops& ops, const Rep& m, const SubSpaces& s);  // NotASubmodule

struct SubRep {
    Rep rep;
    MapTo incl;  // sub -> parent
};
SubRep materialize(const Ops& ops, const Rep& m, const SubSpaces& s);

int loewy_length(const Ops& ops, const Rep& m);
QuotientRep top(const Ops& ops, const Rep& m);

// Kernel of a module map, materialized as a representation.
SubRep kernel_rep(const Ops& ops, const Rep& x, const Rep& y, const MapTo& f);

// Basis of Hom(x, y) as intertwiners, in reduced echelon form with respect to
// the flattened coordinate layout (deterministic).
std::vector<MapTo> hom_basis(const Ops& ops, const Rep& x, const Rep& y);

std::vector<uint32_t> flatten_map(const Rep& x, const Rep& y, const MapTo& f);
MapTo unflatten_map(const Ops& ops, const Rep& x, const Rep& y, const std::vector<uint32_t>& v);
int hom_flat_dim(const Rep& x, const Rep& y);

// Cached hom space with coordinate solver.
struct HomSpace {
    std::vector<MapTo> basis;
    Matrix flat;  // columns = flattened basis
    CoordSolver solver;
    int dim() const { return static_cast<int>(basis.size()); }
    // coordinates of a map in this basis; nullopt if not in the span
    std::optional<std::vector<uint32_t>> coords(const Rep& x, const Rep& y, const MapTo& f) const;
};
HomSpace hom_space(const Ops& ops, const Rep& x, const Rep& y);

// Local = simple top. Slot and projection data for the top of a local module.
bool is_local(const Ops& ops, const Rep& m);
struct LocalTop {
    int slot = -1;                 // slot carrying the 1-dimensional top
    std::vector<uint32_t> pi;      // row functional on m_slot, kernel = (mJ)_slot
    std::vector<uint32_t> gen;     // lift of the top basis vector, pi . gen = 1
};
LocalTop local_top(const Ops& ops, const Rep& m);  // NotLocal

// Scalar induced on tops by a map between local modules with matching top
// slots; 0 whenever the top slots differ.
uint32_t top_scalar(const Ops& ops, const Rep& x, const LocalTop& tx, const Rep& y,
                    const LocalTop& ty, const MapTo& f);

bool is_isomorphic(const Ops& ops, const Rep& x, const Rep& y);

// m = x (+) complement when some basis pair composes to an automorphism of the
// local module x; nullopt when x is not a direct summand of m.
std::optional<Rep> split_local_summand(const Ops& ops, const Rep& m, const Rep& x);

struct DecomposeResult {
    bool ok = false;
    std::vector<int> counts;  // per catalog index
    Rep remainder;            // stuck remainder when !ok
};
DecomposeResult decompose_into(const Ops& ops, const Rep& m, const std::vector<const Rep*>& catalog);

}  // namespace adr
