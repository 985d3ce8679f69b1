#pragma once

#include "starkcol/forms.hpp"
#include "starkcol/parallel.hpp"
#include "starkcol/quadfield.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace starkcol {

// ceilings for class_group()
inline const Int kEnumerateCeiling = Int(10000000);        // 1e7 on delta
inline const Int kBsgsCeiling = Int("1000000000000");      // 1e12 on delta

// all reduced forms of discriminant delta (serial reference / OpenMP kernel)
std::vector<Form> enumerate_reduced_forms(const Int& delta, Exec exec = Exec::openmp);

// Explicit finite abelian group of ideal classes. Elements are canonical
// representatives in sorted order; multiplication falls back to form
// composition when the group is too large for a dense table. An optional
// canonicalizer is applied after each composition, which is how quotient
// groups (wide classes) reuse the same machinery.
class SmallGroup {
public:
    using CanonFn = std::function<IdealClass(const IdealClass&)>;

    static SmallGroup from_elements(const Int& delta, std::vector<IdealClass> elems,
                                    CanonFn canon = {});

    const Int& delta() const { return delta_; }
    std::size_t size() const { return elems_.size(); }
    const std::vector<IdealClass>& elems() const { return elems_; }
    const IdealClass& elem(std::size_t i) const { return elems_[i]; }

    std::size_t id() const { return id_; }
    std::size_t index_of(const IdealClass& c) const; // throws BadArgument if absent
    std::optional<std::size_t> try_index_of(const IdealClass& c) const;

    std::size_t mul(std::size_t i, std::size_t j) const;
    std::size_t inv(std::size_t i) const;
    std::size_t pow(std::size_t i, Int e) const;
    Int order_of(std::size_t i) const;

    bool has_table() const { return !table_.empty(); }

private:
    Int delta_;
    std::vector<IdealClass> elems_;
    std::map<std::string, std::size_t> index_;
    std::vector<std::vector<std::uint32_t>> table_; // filled when size <= kTableCap
    std::size_t id_ = 0;
    CanonFn canon_;

    static constexpr std::size_t kTableCap = 1500;
};

std::string form_key(const Form& f);

// elementary divisors (ascending, d1 | d2 | ... | dk, product = |G|) plus a
// generator basis with ord(gens[i]) = divisors[i]
struct GroupStructure {
    Int order;
    std::vector<Int> divisors;
    std::vector<std::size_t> gens;
};

GroupStructure group_structure(const SmallGroup& g);

// spec-facing class group record
struct ClassGroup {
    Int D;
    Int delta;
    int unit_norm = 0;
    Int h;                                   // wide class number
    Int h_narrow;
    std::vector<Int> divisors;               // wide elementary divisors
    std::vector<std::pair<Form, Int>> gens;  // wide generators (canonical reps) + orders
    std::vector<Int> divisors_narrow;
    std::vector<std::pair<Form, Int>> gens_narrow;
};

enum class ClassGroupMode { enumerate, bsgs };

ClassGroup class_group(const QuadField& K, ClassGroupMode mode, Exec exec = Exec::openmp);

// the narrow class group as an explicit group (enumerated)
SmallGroup narrow_group(const Int& delta, Exec exec = Exec::openmp);

// narrow class group via truncated-Euler-product class number window plus
// baby-step giant-step order resolution over prime-form generators
SmallGroup narrow_group_bsgs(const QuadField& K, Exec exec = Exec::openmp);

// Wide group = narrow group modulo the class of a norm-negative principal
// ideal; elements are coset-minimal canonical representatives.
struct WideGroup {
    SmallGroup group;                 // wide classes with their own table
    std::vector<std::size_t> project; // narrow index -> wide index
};

WideGroup wide_group(const SmallGroup& narrow);

// number of elementary divisors divisible by p = dim_Fp Hom(Cl[p], mu_p)
long p_rank(const ClassGroup& g, const Int& p);

// order of a single class by baby-step giant-step, given an upper bound;
// the baby table build is an OpenMP kernel with a serial reference
Int element_order_bsgs(const IdealClass& g, const Int& upper, Exec exec = Exec::openmp);

// square-free D in (1, limit) — radicands of the fundamental sweep
std::vector<Int> fundamental_radicands(const Int& limit);

} // namespace starkcol
