#pragma once

#include <deque>
#include <optional>
#include <vector>

#include "ldc/syntax.hpp"

// Word monoids over the associator/distributor alphabets, the H/L/R functor
// evaluation, the tau and kappa natural-transformation builders, and the
// decomposition of terms into whiskered atomic factors.

namespace ldc {

// Letters of the free monoids: {al, ali} rebracket tensor products, the
// other four rebracket/distribute into par products. Index 0 of a word is
// its terminal letter (the outermost constructor of the composite).
enum class Letter : std::uint8_t { Al, Ali, Ap, Api, Dl, Dr };

using Word = std::vector<Letter>;
using ObjVec = std::deque<ObjPtr>;

// Letters al/ap/dl bind the front entry of the vector, ali/api/dr the back.
bool letter_binds_front(Letter l);
bool letter_in_y(Letter l);  // {al, ali}
bool letter_in_z(Letter l);  // {ap, api, dl, dr}
const char* letter_name(Letter l);
std::optional<Letter> letter_of_name(const std::string& name);

struct LengthMismatch : std::runtime_error {
  explicit LengthMismatch(const std::string& msg) : std::runtime_error(msg) {}
};
struct AlphabetMismatch : std::runtime_error {
  explicit AlphabetMismatch(const std::string& msg) : std::runtime_error(msg) {}
};

// Identity base i = id_{left ⊠ right} of a tau/kappa family.
struct BaseSplit {
  ObjPtr left, right;
  Conn conn{Conn::Ot};
};

struct Hlr {
  ObjPtr h, l, r;
};

// Per-letter slot assignment: which vector entry each word position binds.
std::vector<ObjPtr> assign_slots(const Word& u, const ObjVec& vec);

// H/L/R of the family over an identity base, evaluated at `vec`.
Hlr eval_hlr(const BaseSplit& base, const Word& u, const ObjVec& vec);

// Same recursion over explicit base endpoints (used for non-identity bases).
Hlr eval_hlr_over(const Hlr& base, const Word& u, const ObjVec& vec);

// Term builders. The returned term typechecks with source H and target
// L ⊠ R of eval_hlr.
TermPtr build_tau(const BaseSplit& base, const Word& u, const ObjVec& vec);
TermPtr build_kappa(const BaseSplit& base, const Word& u, const ObjVec& vec);

// Builds the spine term over an arbitrary base term with known endpoints.
TermPtr build_spine_term(const TermPtr& base_term, const Hlr& base, const Word& u,
                         const ObjVec& vec);

// ---------------------------------------------------------------------------
// Atomic factors

enum class Side : std::uint8_t { Left, Right };

// One whisker layer: the bystander object sits on `side` of the connective,
// the wrapped morphism on the other side. Layers are listed outermost-first.
struct Whisk {
  Side side;
  Conn conn;
  ObjPtr bystander;
};

// A coherence generator (or, in functor mode, a mu/cm component or the image
// F[f] of a source-category morphism) tensored with identities along a
// whisker path.
struct Factor {
  enum class Kind : std::uint8_t { Core, Mu, Delta, Lift };

  Kind kind{Kind::Core};
  CoreKind core{};       // Kind::Core
  ObjPtr a, b, c;        // Kind::Core parameters
  ObjPtr ca, cb;         // Mu/Delta parameters (source-category objects)
  TermPtr lifted;        // Kind::Lift (an elementary source-category term)
  std::vector<Whisk> whisker;

  static Factor coh(CoreKind k, ObjPtr a, ObjPtr b, ObjPtr c) {
    Factor f;
    f.kind = Kind::Core;
    f.core = k;
    f.a = std::move(a);
    f.b = std::move(b);
    f.c = std::move(c);
    return f;
  }
  static Factor mu(ObjPtr x, ObjPtr y) {
    Factor f;
    f.kind = Kind::Mu;
    f.ca = std::move(x);
    f.cb = std::move(y);
    return f;
  }
  static Factor delta(ObjPtr x, ObjPtr y) {
    Factor f;
    f.kind = Kind::Delta;
    f.ca = std::move(x);
    f.cb = std::move(y);
    return f;
  }
  static Factor lift(TermPtr f_inner) {
    Factor f;
    f.kind = Kind::Lift;
    f.lifted = std::move(f_inner);
    return f;
  }

  Factor whiskered(Side s, Conn c, const ObjPtr& bystander) const {
    Factor f = *this;
    f.whisker.insert(f.whisker.begin(), Whisk{s, c, bystander});
    return f;
  }
};

Endpoints factor_endpoints(const Factor& f, TermMode mode);
TermPtr factor_term(const Factor& f);
std::string render(const Factor& f);

// Splits a well-typed term into atomic factors, outermost (last applied)
// first; identities contribute nothing. Tensors of two non-identities split
// as f ⊠ g = (f ⊠ id) ∘ (id ⊠ g).
std::vector<Factor> atomize(const TermPtr& t, TermMode mode = TermMode::Plain);

}  // namespace ldc
