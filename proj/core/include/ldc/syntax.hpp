#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>

// Object and morphism term languages of the free unitless linearly
// distributive category, with parsing, printing, ranks and type-checking.
//
// Two binary connectives: `*` (tensor, Ot) and `@` (par, Par). Terms are
// immutable shared trees; all functions here are pure and thread-safe.

namespace ldc {

enum class Conn : std::uint8_t { Ot, Par };

// ---------------------------------------------------------------------------
// Errors

struct ParseError : std::runtime_error {
  std::size_t pos;
  ParseError(std::size_t p, const std::string& msg)
      : std::runtime_error("parse error at " + std::to_string(p) + ": " + msg), pos(p) {}
};

struct ModeError : std::runtime_error {
  explicit ModeError(const std::string& msg) : std::runtime_error("mode error: " + msg) {}
};

struct TypeMismatch : std::runtime_error {
  std::string path;
  TypeMismatch(std::string p, const std::string& msg)
      : std::runtime_error("type mismatch at " + p + ": " + msg), path(std::move(p)) {}
};

// Raised when the rewrite engine reaches a state the coherence lemmas prove
// unreachable; always an implementation bug, never a user error.
struct InternalTypeError : std::logic_error {
  explicit InternalTypeError(const std::string& msg)
      : std::logic_error("internal type error: " + msg) {}
};

// Raised when an executable consequence of a coherence theorem fails.
struct CoherenceViolation : std::runtime_error {
  explicit CoherenceViolation(const std::string& msg)
      : std::runtime_error("coherence violation: " + msg) {}
};

struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// ---------------------------------------------------------------------------
// Objects

class Obj;
using ObjPtr = std::shared_ptr<const Obj>;

class Obj {
 public:
  enum class Kind : std::uint8_t { Gen, FBox, Tens };

  Kind kind;
  Conn conn{Conn::Ot};  // Tens only
  std::string name;     // Gen only
  ObjPtr left, right;   // Tens only
  ObjPtr inner;         // FBox only

  std::size_t hash = 0;
  int leaves = 0;        // number of generator/FBox leaves
  bool has_star = false; // contains the terminal-category object

  Obj() = default;
};

ObjPtr gen(const std::string& name);
ObjPtr star();  // the unique object of the terminal source category
ObjPtr fbox(const ObjPtr& inner);
ObjPtr tens(Conn c, const ObjPtr& l, const ObjPtr& r);
ObjPtr ot(const ObjPtr& l, const ObjPtr& r);
ObjPtr par(const ObjPtr& l, const ObjPtr& r);

bool obj_eq(const ObjPtr& a, const ObjPtr& b);
bool is_gen(const ObjPtr& o);
bool is_fbox(const ObjPtr& o);
bool is_tens(const ObjPtr& o, Conn c);

// Strict weak order for deterministic containers/exports.
bool obj_less(const ObjPtr& a, const ObjPtr& b);

// ---------------------------------------------------------------------------
// Ranks

// Positive weight per generator; unassigned generators weigh 1.
struct RankAssignment {
  std::map<std::string, long long> weights;
  long long of(const std::string& name) const {
    auto it = weights.find(name);
    return it == weights.end() ? 1 : it->second;
  }
};

long long rank(const ObjPtr& x, const RankAssignment& r = {});

// ---------------------------------------------------------------------------
// Morphism terms

enum class CoreKind : std::uint8_t { Alpha, AlphaInv, AlphaBar, AlphaBarInv, DeltaL, DeltaR };

class Term;
using TermPtr = std::shared_ptr<const Term>;

class Term {
 public:
  enum class Kind : std::uint8_t { Id, Core, Comp, TensOt, TensPar, Mu, DeltaF, Lift };

  Kind kind;
  ObjPtr x;            // Id
  CoreKind core{};     // Core
  ObjPtr a, b, c;      // Core parameters
  TermPtr f, g;        // Comp(after=f, before=g) and tensors (f ⊠ g)
  ObjPtr ca, cb;       // Mu/DeltaF parameters (source-category objects)
  TermPtr inner;       // Lift

  Term() = default;
};

TermPtr t_id(const ObjPtr& x);
TermPtr t_core(CoreKind k, const ObjPtr& a, const ObjPtr& b, const ObjPtr& c);
TermPtr t_comp(const TermPtr& after, const TermPtr& before);  // after ∘ before
TermPtr t_tens(Conn c, const TermPtr& f, const TermPtr& g);
TermPtr t_mu(const ObjPtr& x, const ObjPtr& y);
TermPtr t_cm(const ObjPtr& x, const ObjPtr& y);
TermPtr t_lift(const TermPtr& f);

// Term language selector: Plain is the free LD category on a generator set,
// Functor adds mu/cm/F[-] over it, Spider is the functor language over the
// terminal source category (objects written `*`).
enum class TermMode : std::uint8_t { Plain, Functor, Spider };

// ---------------------------------------------------------------------------
// Parsing and printing

ObjPtr parse_object(const std::string& text, TermMode mode = TermMode::Plain);
TermPtr parse_morphism(const std::string& text, TermMode mode = TermMode::Plain);

std::string render(const ObjPtr& x);
std::string render(const TermPtr& t);

// ---------------------------------------------------------------------------
// Type-checking

struct Endpoints {
  ObjPtr src, tgt;
};

// Source and target of a coherence generator:
//   al  : a*(b*c) -> (a*b)*c      ap  : a@(b@c) -> (a@b)@c
//   al' : (a*b)*c -> a*(b*c)      ap' : (a@b)@c -> a@(b@c)
//   dl  : a*(b@c) -> (a*b)@c      dr  : (a@b)*c -> a@(b*c)
Endpoints core_endpoints(CoreKind k, const ObjPtr& a, const ObjPtr& b, const ObjPtr& c);

// Computes endpoints bottom-up; throws TypeMismatch (with a subterm path)
// when a composition interface disagrees, ModeError when functor-only
// constructors appear in Plain mode.
Endpoints typecheck(const TermPtr& t, TermMode mode = TermMode::Plain);

// F applied to a source-category object, as an object of the target
// category. In Spider mode every F-image is the single leaf F(*).
ObjPtr fobj(const ObjPtr& c_obj, TermMode mode);

}  // namespace ldc
