#pragma once

#include <map>
#include <string>
#include <vector>

#include "adr/presentation.hpp"
#include "adr/rep.hpp"

namespace adr {

// Right A-modules for A = KQ/I are representations: the operator set is the
// arrow set, and right multiplication by a path is the composite of the arrow
// actions in path order.
Ops algebra_ops(const Presentation& pres);

struct NamedRep {
    Rep rep;
    std::string name;
};

// Checks that every defining relation acts as zero; throws InvariantViolation.
void check_relations(const Presentation& pres, const Rep& m);

// Action of a path / of a general element on a representation (src -> tgt slot).
Matrix path_action(const Presentation& pres, const Rep& m, const Path& p);

Rep projective_rep(const Presentation& pres, int vertex);
Rep simple_rep(const Presentation& pres, int vertex);

// The cyclic local module P(vertex) / <gens>, where each generator is an
// element of e_vertex . A and the submodule is its closure under the arrow
// actions.
Rep local_from_generators(const Presentation& pres, int vertex, const std::vector<LinComb>& gens);

// Coordinates of a normal-form element inside P(vertex) (slot layout of the
// projective's path basis).
std::vector<std::pair<int, std::vector<uint32_t>>> element_vectors(const Presentation& pres,
                                                                   int vertex, const LinComb& nf);

// -------- module description files --------
//
//   local <name> = P <vertex> [/ <path expr>, <path expr>, ...]
//   module <name> = <local> + <local> + ...
//
// '#' starts a comment. Local and module names may contain any characters
// except '=', '+', ',' and newlines; surrounding whitespace is trimmed.
struct ModuleFile {
    std::vector<NamedRep> locals;
    std::vector<std::pair<std::string, std::vector<std::string>>> modules;

    int local_index(const std::string& name) const;
    // Resolve a module line into its list of locals; empty name picks the
    // unique module when exactly one is declared.
    std::vector<NamedRep> resolve(const std::string& name) const;
};

ModuleFile parse_module_file(const Presentation& pres, const std::string& text);

}  // namespace adr
