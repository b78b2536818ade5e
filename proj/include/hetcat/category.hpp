#ifndef HETCAT_CATEGORY_HPP
#define HETCAT_CATEGORY_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hetcat/common.hpp"
#include "hetcat/validation.hpp"

namespace hetcat {

// ---------------------------------------------------------------------------
// Raw tables. Everything a finite category is, fully explicit. Mutable and
// unchecked; FinCategory wraps a validated copy.

struct MorRec {
  std::string name;
  ObjId dom;
  ObjId cod;
};

struct CategoryData {
  std::string name;
  std::vector<std::string> obj_names;
  std::vector<MorRec> mors;
  std::vector<MorId> identity;    // per object
  std::vector<MorId> compose;     // flat [g.v * n_mors + f.v], kNone off-domain

  std::size_t n_objects() const { return obj_names.size(); }
  std::size_t n_morphisms() const { return mors.size(); }
  MorId compose_entry(MorId g, MorId f) const {
    return compose[static_cast<std::size_t>(g.v) * mors.size() + f.v];
  }
  void set_compose_entry(MorId g, MorId f, MorId gf) {
    compose[static_cast<std::size_t>(g.v) * mors.size() + f.v] = gf;
  }
};

/// Checks the category axioms on raw tables: well-formed ids, identity table,
/// totality of composition exactly on composable pairs, identity laws, and
/// associativity on all composable triples. Empty report = valid.
ValidationReport validate_category(const CategoryData& d, const RunOptions& opts = {});

// ---------------------------------------------------------------------------

class FinCategoryBuilder;

/// A finite category as immutable validated tables. Construct through
/// FinCategoryBuilder; every instance in the system has passed
/// validate_category before anything else may touch it.
class FinCategory {
 public:
  const std::string& name() const { return d_.name; }
  std::size_t n_objects() const { return d_.n_objects(); }
  std::size_t n_morphisms() const { return d_.n_morphisms(); }

  const std::string& object_name(ObjId o) const { return d_.obj_names.at(o.v); }
  const std::string& morphism_name(MorId m) const { return d_.mors.at(m.v).name; }
  ObjId dom(MorId m) const { return d_.mors[m.v].dom; }
  ObjId cod(MorId m) const { return d_.mors[m.v].cod; }
  MorId identity_of(ObjId o) const { return d_.identity[o.v]; }
  bool is_identity(MorId m) const { return d_.identity[dom(m).v] == m; }

  std::optional<ObjId> find_object(const std::string& name) const;
  std::optional<MorId> find_morphism(const std::string& name) const;

  bool is_composable(MorId g, MorId f) const { return cod(f) == dom(g); }

  /// compose(g, f) = "f first, then g"; defined when cod(f) = dom(g).
  MorId compose(MorId g, MorId f) const;
  MorId try_compose(MorId g, MorId f) const {  // kNone when not composable
    return d_.compose_entry(g, f);
  }

  /// All morphisms x => y in canonical (insertion) order.
  const std::vector<MorId>& hom_set(ObjId x, ObjId y) const;

  /// Morphisms with the given domain / codomain, canonical order.
  const std::vector<MorId>& mors_from(ObjId x) const { return out_.at(x.v); }
  const std::vector<MorId>& mors_into(ObjId y) const { return in_.at(y.v); }

  /// Position of m within mors_from(dom(m)) / mors_into(cod(m)).
  std::uint32_t pos_from(MorId m) const { return pos_from_[m.v]; }
  std::uint32_t pos_into(MorId m) const { return pos_into_[m.v]; }

  /// All isomorphisms x => y, canonical order.
  std::vector<MorId> find_isomorphisms(ObjId x, ObjId y) const;

  /// Inverse of an isomorphism; kNone if m is not iso.
  MorId try_inverse(MorId m) const;

  const CategoryData& data() const { return d_; }

  /// Tables equal entry-for-entry (names ignored): "equal up to canonical
  /// renaming of identifiers".
  static bool same_shape(const FinCategory& a, const FinCategory& b);

 private:
  friend class FinCategoryBuilder;
  explicit FinCategory(CategoryData d);
  void index();

  CategoryData d_;
  std::vector<std::vector<MorId>> out_, in_;             // per object
  std::vector<std::vector<std::vector<MorId>>> hom_;     // [dom][cod]
  std::vector<std::uint32_t> pos_from_, pos_into_;
  std::unordered_map<std::string, std::uint32_t> obj_by_name_, mor_by_name_;
};

class FinCategoryBuilder {
 public:
  explicit FinCategoryBuilder(std::string name) { d_.name = std::move(name); }

  ObjId add_object(std::string name);
  MorId add_morphism(std::string name, ObjId dom, ObjId cod);
  /// Adds "id_<obj>" and marks it as the identity.
  MorId add_identity(ObjId o);
  void set_identity(ObjId o, MorId m);
  void set_compose(MorId g, MorId f, MorId gf);

  std::size_t n_objects() const { return d_.obj_names.size(); }
  std::size_t n_morphisms() const { return d_.mors.size(); }
  const CategoryData& data() const { return d_; }
  CategoryData& data() { return d_; }

  /// Validates and freezes. Throws StructuralError with the report text when
  /// invalid; use try_build to inspect violations instead.
  FinCategory build(const RunOptions& opts = {}) const;
  std::optional<FinCategory> try_build(ValidationReport& out,
                                       const RunOptions& opts = {}) const;

 private:
  void finalize_tables() const;
  mutable CategoryData d_;
  mutable bool finalized_ = false;
};

// ---------------------------------------------------------------------------
// Constructions

/// Same objects and morphisms, arrows reversed: compose'(g, f) = compose(f, g).
FinCategory opposite_category(const FinCategory& c, const RunOptions& opts = {});

/// Objects are pairs "(c,d)", morphisms are pairs, composition componentwise.
FinCategory product_category(const FinCategory& c, const FinCategory& d,
                             const RunOptions& opts = {});

/// Full subcategory on the given objects (in the given order). `obj_map` and
/// `mor_map` receive old-id -> new-id tables.
FinCategory full_subcategory(const FinCategory& c, const std::vector<ObjId>& objs,
                             std::vector<ObjId>* obj_map = nullptr,
                             std::vector<MorId>* mor_map = nullptr);

// ---------------------------------------------------------------------------
// Functors

struct FunctorData {
  std::string name;
  const FinCategory* source = nullptr;
  const FinCategory* target = nullptr;
  std::vector<ObjId> obj_map;  // per source object
  std::vector<MorId> mor_map;  // per source morphism
};

/// Endpoint, identity and composition preservation; violations itemized.
ValidationReport validate_functor(const FunctorData& f, const RunOptions& opts = {});

class Functor {
 public:
  /// Validates eagerly; throws StructuralError when the maps break a law.
  explicit Functor(FunctorData d, const RunOptions& opts = {});

  const std::string& name() const { return d_.name; }
  const FinCategory& source() const { return *d_.source; }
  const FinCategory& target() const { return *d_.target; }
  ObjId apply(ObjId o) const { return d_.obj_map[o.v]; }
  MorId apply(MorId m) const { return d_.mor_map[m.v]; }
  const FunctorData& data() const { return d_; }

  static Functor identity(const FinCategory& c, std::string name = "Id");
  static bool same_maps(const Functor& a, const Functor& b);

 private:
  FunctorData d_;
};

// ---------------------------------------------------------------------------
// Natural transformations

struct NatTransformData {
  std::string name;
  const Functor* from = nullptr;  // F
  const Functor* to = nullptr;    // G, parallel to F
  std::vector<MorId> components;  // per source object, morphisms in target
};

/// Empty iff every naturality square commutes; with require_iso, additionally
/// every component is an isomorphism in the target category.
ValidationReport check_natural_transformation(const NatTransformData& t,
                                              bool require_iso = false);

}  // namespace hetcat

#endif
