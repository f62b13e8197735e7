#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "catcom/category.hpp"
#include "catcom/law_report.hpp"
#include "catcom/monoid.hpp"

namespace catcom {

// A category with a unit object, a tensor on objects, the partial functors
// u (x) - and - (x) v, and constraint arrows lambda_a : i(x)a -> a,
// rho_a : a(x)i -> a, alpha_abc : (a(x)b)(x)c -> a(x)(b(x)c). Tables may be
// defective; premonoidal_validate reports it.
class PremonoidalData {
 public:
  // tensor[a * n + b], ltensor[u * arrows + f] = u (x) f,
  // rtensor[f * n + v] = f (x) v, assoc[(a * n + b) * n + c].
  PremonoidalData(FiniteCategory base, ObjectId unit, std::vector<ObjectId> tensor,
                  std::vector<ArrowId> ltensor, std::vector<ArrowId> rtensor, std::vector<ArrowId> lambda,
                  std::vector<ArrowId> rho, std::vector<ArrowId> assoc);

  const FiniteCategory& base() const { return base_; }
  ObjectId unit() const { return unit_; }
  ObjectId tensor(ObjectId a, ObjectId b) const { return tensor_.at(a * n() + b); }
  ArrowId ltensor(ObjectId u, ArrowId f) const { return ltensor_.at(u * base_.arrow_count() + f); }
  ArrowId rtensor(ArrowId f, ObjectId v) const { return rtensor_.at(f * n() + v); }
  ArrowId lambda(ObjectId a) const { return lambda_.at(a); }
  ArrowId rho(ObjectId a) const { return rho_.at(a); }
  ArrowId assoc(ObjectId a, ObjectId b, ObjectId c) const { return assoc_.at((a * n() + b) * n() + c); }

  void set_assoc(ObjectId a, ObjectId b, ObjectId c, ArrowId f) { assoc_.at((a * n() + b) * n() + c) = f; }
  void set_ltensor(ObjectId u, ArrowId f, ArrowId g) { ltensor_.at(u * base_.arrow_count() + f) = g; }
  void set_rtensor(ArrowId f, ObjectId v, ArrowId g) { rtensor_.at(f * n() + v) = g; }
  void set_lambda(ObjectId a, ArrowId f) { lambda_.at(a) = f; }
  void set_rho(ObjectId a, ArrowId f) { rho_.at(a) = f; }

 private:
  std::size_t n() const { return base_.object_count(); }

  FiniteCategory base_;
  ObjectId unit_;
  std::vector<ObjectId> tensor_;
  std::vector<ArrowId> ltensor_;
  std::vector<ArrowId> rtensor_;
  std::vector<ArrowId> lambda_;
  std::vector<ArrowId> rho_;
  std::vector<ArrowId> assoc_;
};

// f : a -> a' fails square 1 against g : b -> b' when
// (a' (x) g) . (f (x) b) != (f (x) b') . (a (x) g), and square 2 when
// (g (x) a') . (b (x) f) != (b' (x) f) . (g (x) a).
struct CentralityWitness {
  ArrowId f = 0;
  ArrowId g = 0;
  int square = 1;
};

std::optional<CentralityWitness> centrality_witness(const PremonoidalData& p, ArrowId f);
bool is_central(const PremonoidalData& p, ArrowId f);
std::vector<ArrowId> central_arrows(const PremonoidalData& p);

// Laws: typing, functoriality, invertibility, lambda-naturality,
// rho-naturality, alpha-naturality, triangle, pentagon, central-constraints.
LawReport premonoidal_validate(const PremonoidalData& p);

struct PremonoidalCentre {
  PremonoidalData structure;
  // Arrow of the centre -> arrow of the original category.
  Functor inclusion;
};

// The wide subcategory of central arrows with the restricted structure.
// Throws InputError when p fails validation or the centre is not closed.
PremonoidalCentre premonoidal_centre(const PremonoidalData& p);

// Laws: source-monoidal, functor, objects, unit, tensor, constraints,
// centrality. Throws InputError when F is not bijective on objects.
LawReport freyd_validate(const PremonoidalData& a, const PremonoidalData& m, const Functor& f);

struct CospanSquareVerdict {
  bool commutes = true;
  std::optional<std::pair<ArrowId, ArrowId>> witness;
  explicit operator bool() const { return commutes; }
};

// Whether (b (x) y) . (x (x) c) = (x (x) d) . (a (x) y) for all x : a -> b
// in xs and y : c -> d in ys. The witness is the first failing pair.
CospanSquareVerdict freyd_cospan_commutes(const PremonoidalData& m, const std::vector<ArrowId>& xs,
                                          const std::vector<ArrowId>& ys);

// Codiscrete two-object category times the one-object category of m, with
// objects tensored by addition mod 2 and arrows by their monoid components
// unchanged. Monoidal iff m is commutative; the centre is centre(m).
PremonoidalData codiscrete_monoid_premonoidal(const FiniteMonoid& m);
// {e, p, q} with unit e and x y = x on {p, q}.
FiniteMonoid left_zero_band();

// Grammar: the category items plus
//   "unit" IDENT ";" | "tensor" IDENT "," IDENT "=" IDENT ";"
//   "ltensor" IDENT "," IDENT "=" IDENT ";"   (object, arrow)
//   "rtensor" IDENT "," IDENT "=" IDENT ";"   (arrow, object)
//   "lambda" IDENT "=" IDENT ";" | "rho" IDENT "=" IDENT ";"
//   "assoc" IDENT "," IDENT "," IDENT "=" IDENT ";"
// inside "premonoidal" IDENT "{" ... "}". Tensors with identities and
// constraints between equal objects default to identities.
PremonoidalData parse_premonoidal(std::string_view text);
std::string render_premonoidal(const PremonoidalData& p);

}  // namespace catcom
