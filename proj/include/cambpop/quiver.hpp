#pragma once

#include <optional>
#include <vector>

#include "cambpop/cambrian.hpp"
#include "cambpop/coxelem.hpp"
#include "cambpop/matrix.hpp"

namespace cambpop {

// Quiver Q_c: arrow i -> j iff i precedes j in c and {i,j} is an edge of
// the (simply-laced) Coxeter graph.
struct Quiver {
    int n = 0;
    std::vector<std::pair<int, int>> arrows;

    static Quiver of_coxeter(const CoxeterDiagram& dia, const CoxeterElement& c);
};

// Representation: one vector space per vertex, one matrix per arrow
// (mat[a]: V_from -> V_to, shape dim[to] x dim[from]).
struct Rep {
    std::vector<int> dim;
    std::vector<QMat> mat;

    static Rep zero(const Quiver& q);
    static Rep simple(const Quiver& q, int vertex);
    int total_dim() const;
    bool is_zero() const { return total_dim() == 0; }
};

// Morphism between two representations of the same quiver: one matrix per
// vertex.
using RepMap = std::vector<QMat>;

Rep direct_sum(const Quiver& q, const std::vector<const Rep*>& parts);
bool is_morphism(const Quiver& q, const Rep& a, const Rep& b, const RepMap& f);
bool map_injective(const RepMap& f);
bool map_surjective(const Rep& b, const RepMap& f);
RepMap compose(const RepMap& g, const RepMap& f);  // g after f

std::vector<RepMap> hom_basis(const Quiver& q, const Rep& a, const Rep& b);
int hom_dim(const Quiver& q, const Rep& a, const Rep& b);
int ext_dim(const Quiver& q, const Rep& a, const Rep& b);  // Ext^1(a, b)
long long euler_form(const Quiver& q, const std::vector<int>& d, const std::vector<int>& e);

Rep kernel_rep(const Quiver& q, const Rep& a, const Rep& b, const RepMap& f, RepMap* incl);
Rep coker_rep(const Quiver& q, const Rep& a, const Rep& b, const RepMap& f, RepMap* proj);

// Basis of Ext^1(a, b) as per-arrow matrix tuples psi (maps a_from -> b_to);
// middle_term assembles 0 -> b -> E -> a -> 0 for one class.
std::vector<std::vector<QMat>> ext_basis(const Quiver& q, const Rep& a, const Rep& b);
Rep middle_term(const Quiver& q, const Rep& a, const Rep& b, const std::vector<QMat>& psi,
                RepMap* incl_b, RepMap* proj_a);

// socle = per-vertex intersection of outgoing-arrow kernels
Rep socle_quotient(const Quiver& q, const Rep& m, Rep* soc);

// The whole module category of KQ_c for a simply-laced Dynkin quiver:
// indecomposables indexed by positive roots, Hom/Ext tables, torsion
// classes as bitsets over root indices.
class RepCat {
public:
    RepCat(const CoxGroup& W, const CoxeterElement& c);

    const CoxGroup& group() const { return *W_; }
    const CoxeterElement& coxeter() const { return c_; }
    const Quiver& quiver() const { return q_; }
    int num_indec() const { return int(indec_.size()); }
    const Rep& indec(int r) const { return indec_[std::size_t(r)]; }
    int root_of(const Rep& m) const;  // -1 if not indecomposable

    int hom(int a, int b) const { return hom_[std::size_t(a)][std::size_t(b)]; }
    int ext(int a, int b) const { return ext_[std::size_t(a)][std::size_t(b)]; }

    // multiplicity vector via the unitriangular Hom-matrix solve
    std::vector<int> decompose(const Rep& m) const;

    // torsion machinery over brick bitsets (indexed by roots)
    Bitset perp_right(const Bitset& c) const;  // {m : Hom(c, m) = 0}
    Bitset perp_left(const Bitset& c) const;   // {m : Hom(m, c) = 0}
    Bitset t_closure(const Bitset& c) const;   // T(C) = perp_left(perp_right(C))
    bool is_torsion_class(const Bitset& t) const;
    Bitset filt_of_semibrick(const Bitset& x) const;  // indecs of Filt(X)

    // all torsion classes (by closure enumeration); sorted bitsets
    std::vector<Bitset> all_torsion_classes() const;

private:
    const CoxGroup* W_;
    CoxeterElement c_;
    Quiver q_;
    std::vector<Rep> indec_;
    std::vector<std::vector<int>> hom_, ext_;
};

// tors(KQ_c) as a lattice plus brick labels; elements are torsion-class
// bitsets, built independently of the Cambrian lattice.
struct TorsLattice {
    const RepCat* cat = nullptr;
    FiniteLattice lat;
    std::vector<Bitset> cls;  // per element

    int index_of(const Bitset& t) const;
    std::vector<int> d_bricks(int x) const;  // D(T): labels of lower covers
    std::vector<int> u_bricks(int x) const;  // U(T): labels of upper covers
};

TorsLattice build_tors_lattice(const RepCat& cat);

// phi_c(w) = bricks with dimension vector in inv(w)
Bitset phi_c(const RepCat& cat, const Elt& w);

bool detect_serre(const RepCat& cat, const Bitset& t);
// returns the vertex set S with T = Gen(P(S)) when T is projective-generated
std::optional<std::vector<int>> detect_projective_gen(const RepCat& cat, const TorsLattice& tors,
                                                      const Bitset& t);

// dimension vectors of the indecomposable projectives / injectives
std::vector<int> projective_root(const RepCat& cat);  // per vertex, root index
std::vector<int> injective_root(const RepCat& cat);

} // namespace cambpop
