#pragma once

#include "cambpop/quiver.hpp"

namespace cambpop {

// Semibrick pair (X, Y): two hom-orthogonal brick sets with Y in the
// right-and-Ext-perpendicular of X.  Bricks are root indices.
struct SemibrickPair {
    std::vector<int> x, y;  // sorted

    friend bool operator==(const SemibrickPair& a, const SemibrickPair& b) {
        return a.x == b.x && a.y == b.y;
    }
};

bool is_semibrick(const RepCat& cat, const std::vector<int>& bricks);
bool is_semibrick_pair(const RepCat& cat, const SemibrickPair& p);
// silting-discrete criterion: semibrick pair with |X| + |Y| = n
bool is_smc(const RepCat& cat, const SemibrickPair& p);

SemibrickPair smc_of_torsion(const TorsLattice& tors, int x);  // (D(T), U(T))

// Minimal approximations into add of a finite list of indecomposables.
struct LeftApprox {
    Rep target;             // X'_M
    RepMap g;               // M -> target
    std::vector<int> mult;  // per list entry
};
struct RightApprox {
    Rep source;             // Y'_M
    RepMap g;               // source -> M
    std::vector<int> mult;
};

LeftApprox minimal_left_approx(const RepCat& cat, const Rep& m, const std::vector<int>& w_list);
RightApprox minimal_right_approx(const RepCat& cat, const std::vector<int>& w_list, const Rep& m);

// Projective cover / injective envelope of a W-simple inside the wide
// subcategory Filt(X), X a semibrick, by iterated universal (co)extensions.
struct FiltProjective {
    Rep p;
    RepMap pi;  // P ->> X
};
struct FiltInjective {
    Rep i;
    RepMap iota;  // X >-> I
};
FiltProjective filt_projective_cover(const RepCat& cat, const std::vector<int>& x_bricks,
                                     int target);
FiltInjective filt_injective_envelope(const RepCat& cat, const std::vector<int>& y_bricks,
                                      int target);

bool is_sm_compatible(const RepCat& cat, const SemibrickPair& p);

enum class BrickSource { CokerOfApprox, KerOfApprox, ExtensionTerm, CarriedOver };

struct MutationResult {
    SemibrickPair pair;  // (down, up)
    std::vector<std::pair<int, BrickSource>> down_witness, up_witness;
};

MutationResult mutate_left(const RepCat& cat, const SemibrickPair& p, const std::vector<int>& xp);
MutationResult mutate_right(const RepCat& cat, const SemibrickPair& p, const std::vector<int>& yp);

// T(mu_X(X,Y)) must equal pop_down(T) and T(mu_Y(X,Y)) must equal pop_up(T);
// returns the mutated torsion class for the down direction.
Bitset pop_via_mutation_down(const RepCat& cat, const TorsLattice& tors, int x);
Bitset pop_via_mutation_up(const RepCat& cat, const TorsLattice& tors, int x);

// Preimages of tors element x under pop_down, by the two-condition theorem;
// cross-checked against the brute-force scan inside.
std::vector<int> preimage_set(const RepCat& cat, const TorsLattice& tors, int x);

// conditions characterizing pop_down(T) = Filt(S) for a set S of simples
// (given as a vertex list).
bool two_poppable_conditions(const RepCat& cat, const TorsLattice& tors, int x,
                             const std::vector<int>& s_vertices);

struct MutationDimensionReport {
    bool hom_ext_bijection = true;   // dim Hom(X'_X, Z) = dim Ext^1(X, Z)
    bool ext_vanishing = true;       // Ext^1(X'_X, Z) = 0
    bool hom_bijection = true;       // dim Hom(X'_Y, Z) = dim Hom(Y, Z)
    bool ext_injection = true;       // dim Ext^1(X'_Y, Z) <= dim Ext^1(Y, Z)
};
MutationDimensionReport mutation_dimension_checks(const RepCat& cat, const SemibrickPair& p,
                                                  const std::vector<int>& xp);

} // namespace cambpop
