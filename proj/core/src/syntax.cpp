#include "ldc/syntax.hpp"

#include <cctype>
#include <functional>
#include <sstream>
#include <vector>

namespace ldc {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

// ---------------------------------------------------------------------------
// Object factories

ObjPtr gen(const std::string& name) {
  auto o = std::make_shared<Obj>();
  o->kind = Obj::Kind::Gen;
  o->name = name;
  o->leaves = 1;
  o->has_star = (name == "*");
  o->hash = mix(std::hash<std::string>{}(name), 0x01);
  return o;
}

ObjPtr star() {
  static const ObjPtr s = gen("*");
  return s;
}

ObjPtr fbox(const ObjPtr& inner) {
  auto o = std::make_shared<Obj>();
  o->kind = Obj::Kind::FBox;
  o->inner = inner;
  o->leaves = 1;
  o->has_star = inner->has_star;
  o->hash = mix(inner->hash, 0x02);
  return o;
}

ObjPtr tens(Conn c, const ObjPtr& l, const ObjPtr& r) {
  auto o = std::make_shared<Obj>();
  o->kind = Obj::Kind::Tens;
  o->conn = c;
  o->left = l;
  o->right = r;
  o->leaves = l->leaves + r->leaves;
  o->has_star = l->has_star || r->has_star;
  o->hash = mix(mix(l->hash, r->hash), c == Conn::Ot ? 0x03 : 0x04);
  return o;
}

ObjPtr ot(const ObjPtr& l, const ObjPtr& r) { return tens(Conn::Ot, l, r); }
ObjPtr par(const ObjPtr& l, const ObjPtr& r) { return tens(Conn::Par, l, r); }

bool obj_eq(const ObjPtr& a, const ObjPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->hash != b->hash || a->kind != b->kind) return false;
  switch (a->kind) {
    case Obj::Kind::Gen:
      return a->name == b->name;
    case Obj::Kind::FBox:
      return obj_eq(a->inner, b->inner);
    case Obj::Kind::Tens:
      return a->conn == b->conn && obj_eq(a->left, b->left) && obj_eq(a->right, b->right);
  }
  return false;
}

bool is_gen(const ObjPtr& o) { return o && o->kind == Obj::Kind::Gen; }
bool is_fbox(const ObjPtr& o) { return o && o->kind == Obj::Kind::FBox; }
bool is_tens(const ObjPtr& o, Conn c) {
  return o && o->kind == Obj::Kind::Tens && o->conn == c;
}

bool obj_less(const ObjPtr& a, const ObjPtr& b) { return render(a) < render(b); }

long long rank(const ObjPtr& x, const RankAssignment& r) {
  switch (x->kind) {
    case Obj::Kind::Gen:
      return x->name == "*" ? 1 : r.of(x->name);
    case Obj::Kind::FBox:
      return rank(x->inner, r);
    case Obj::Kind::Tens:
      return rank(x->left, r) + rank(x->right, r);
  }
  return 1;
}

// ---------------------------------------------------------------------------
// Term factories

TermPtr t_id(const ObjPtr& x) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Id;
  t->x = x;
  return t;
}

TermPtr t_core(CoreKind k, const ObjPtr& a, const ObjPtr& b, const ObjPtr& c) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Core;
  t->core = k;
  t->a = a;
  t->b = b;
  t->c = c;
  return t;
}

TermPtr t_comp(const TermPtr& after, const TermPtr& before) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Comp;
  t->f = after;
  t->g = before;
  return t;
}

TermPtr t_tens(Conn c, const TermPtr& f, const TermPtr& g) {
  auto t = std::make_shared<Term>();
  t->kind = c == Conn::Ot ? Term::Kind::TensOt : Term::Kind::TensPar;
  t->f = f;
  t->g = g;
  return t;
}

TermPtr t_mu(const ObjPtr& x, const ObjPtr& y) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Mu;
  t->ca = x;
  t->cb = y;
  return t;
}

TermPtr t_cm(const ObjPtr& x, const ObjPtr& y) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::DeltaF;
  t->ca = x;
  t->cb = y;
  return t;
}

TermPtr t_lift(const TermPtr& f) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Lift;
  t->inner = f;
  return t;
}

// ---------------------------------------------------------------------------
// Tokenizer

namespace {

struct Tok {
  enum class Kind { Ident, Star, At, Dot, LParen, RParen, LBrace, RBrace, LBracket, RBracket, Comma, End };
  Kind kind;
  std::string text;
  std::size_t pos;
};

std::vector<Tok> tokenize(const std::string& s) {
  std::vector<Tok> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    std::size_t p = i;
    switch (ch) {
      case '*': out.push_back({Tok::Kind::Star, "*", p}); ++i; continue;
      case '@': out.push_back({Tok::Kind::At, "@", p}); ++i; continue;
      case '.': out.push_back({Tok::Kind::Dot, ".", p}); ++i; continue;
      case '(': out.push_back({Tok::Kind::LParen, "(", p}); ++i; continue;
      case ')': out.push_back({Tok::Kind::RParen, ")", p}); ++i; continue;
      case '{': out.push_back({Tok::Kind::LBrace, "{", p}); ++i; continue;
      case '}': out.push_back({Tok::Kind::RBrace, "}", p}); ++i; continue;
      case '[': out.push_back({Tok::Kind::LBracket, "[", p}); ++i; continue;
      case ']': out.push_back({Tok::Kind::RBracket, "]", p}); ++i; continue;
      case ',': out.push_back({Tok::Kind::Comma, ",", p}); ++i; continue;
      default: break;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i + 1;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      // keyword forms al' and ap' carry a trailing apostrophe
      if (j < s.size() && s[j] == '\'') ++j;
      out.push_back({Tok::Kind::Ident, s.substr(i, j - i), p});
      i = j;
      continue;
    }
    throw ParseError(p, std::string("unexpected character '") + ch + "'");
  }
  out.push_back({Tok::Kind::End, "", s.size()});
  return out;
}

// Object sub-languages: generators, star trees, or F-boxed leaves thereof.
enum class ObjCtx { CPlain, CStar, DFree, DSpider };

struct Parser {
  const std::vector<Tok>& toks;
  std::size_t i = 0;

  const Tok& peek() const { return toks[i]; }
  const Tok& next() { return toks[i++]; }
  void expect(Tok::Kind k, const char* what) {
    if (peek().kind != k) throw ParseError(peek().pos, std::string("expected ") + what);
    ++i;
  }

  bool is_conn(const Tok& t) const { return t.kind == Tok::Kind::Star || t.kind == Tok::Kind::At; }

  ObjPtr obj_primary(ObjCtx ctx) {
    const Tok& t = peek();
    switch (t.kind) {
      case Tok::Kind::Ident: {
        if (ctx == ObjCtx::CStar)
          throw ParseError(t.pos, "only '*' objects are available over the terminal category");
        if (ctx == ObjCtx::DFree || ctx == ObjCtx::DSpider) {
          if (t.text != "F")
            throw ParseError(t.pos, "functor-mode objects must be F(...) leaves or tensors");
          next();
          expect(Tok::Kind::LParen, "'(' after F");
          ObjPtr in = obj(ctx == ObjCtx::DFree ? ObjCtx::CPlain : ObjCtx::CStar);
          expect(Tok::Kind::RParen, "')'");
          return ctx == ObjCtx::DSpider ? fbox(star()) : fbox(in);
        }
        next();
        return gen(t.text);
      }
      case Tok::Kind::Star:
        if (ctx != ObjCtx::CStar)
          throw ParseError(t.pos, "'*' object is only valid over the terminal category");
        next();
        return star();
      case Tok::Kind::LParen: {
        next();
        ObjPtr o = obj(ctx);
        expect(Tok::Kind::RParen, "')'");
        return o;
      }
      default:
        throw ParseError(t.pos, "expected an object");
    }
  }

  ObjPtr obj(ObjCtx ctx) {
    ObjPtr l = obj_primary(ctx);
    if (is_conn(peek())) {
      Conn c = peek().kind == Tok::Kind::Star ? Conn::Ot : Conn::Par;
      next();
      ObjPtr r = obj_primary(ctx);
      return tens(c, l, r);
    }
    return l;
  }

  ObjPtr braced_obj(ObjCtx ctx) { return obj(ctx); }

  TermPtr mor_keyword(TermMode mode) {
    const Tok& t = peek();
    ObjCtx ambient = mode == TermMode::Plain    ? ObjCtx::CPlain
                     : mode == TermMode::Functor ? ObjCtx::DFree
                                                 : ObjCtx::DSpider;
    ObjCtx cside = mode == TermMode::Spider ? ObjCtx::CStar : ObjCtx::CPlain;

    auto three = [&](CoreKind k) {
      next();
      expect(Tok::Kind::LBrace, "'{'");
      ObjPtr a = obj(ambient);
      expect(Tok::Kind::Comma, "','");
      ObjPtr b = obj(ambient);
      expect(Tok::Kind::Comma, "','");
      ObjPtr c = obj(ambient);
      expect(Tok::Kind::RBrace, "'}'");
      return t_core(k, a, b, c);
    };

    if (t.text == "id") {
      next();
      expect(Tok::Kind::LBrace, "'{'");
      ObjPtr x = obj(ambient);
      expect(Tok::Kind::RBrace, "'}'");
      return t_id(x);
    }
    if (t.text == "al") return three(CoreKind::Alpha);
    if (t.text == "al'") return three(CoreKind::AlphaInv);
    if (t.text == "ap") return three(CoreKind::AlphaBar);
    if (t.text == "ap'") return three(CoreKind::AlphaBarInv);
    if (t.text == "dl") return three(CoreKind::DeltaL);
    if (t.text == "dr") return three(CoreKind::DeltaR);
    if (t.text == "mu" || t.text == "cm") {
      if (mode == TermMode::Plain)
        throw ModeError("'" + t.text + "' is a functor-mode token");
      bool ismu = t.text == "mu";
      next();
      expect(Tok::Kind::LBrace, "'{'");
      ObjPtr x = obj(cside);
      expect(Tok::Kind::Comma, "','");
      ObjPtr y = obj(cside);
      expect(Tok::Kind::RBrace, "'}'");
      return ismu ? t_mu(x, y) : t_cm(x, y);
    }
    if (t.text == "F") {
      if (mode == TermMode::Plain) throw ModeError("'F[...]' is a functor-mode token");
      next();
      expect(Tok::Kind::LBracket, "'['");
      TermPtr f = mor(mode == TermMode::Spider ? TermMode::Spider : TermMode::Plain,
                      /*inner_of_lift=*/true);
      expect(Tok::Kind::RBracket, "']'");
      return t_lift(f);
    }
    throw ParseError(t.pos, "unknown morphism head '" + t.text + "'");
  }

  TermPtr mor_primary(TermMode mode, bool inner_of_lift) {
    const Tok& t = peek();
    if (t.kind == Tok::Kind::Ident) return mor_keyword_inner(mode, inner_of_lift);
    if (t.kind == Tok::Kind::LParen) {
      next();
      TermPtr f = mor(mode, inner_of_lift);
      expect(Tok::Kind::RParen, "')'");
      return f;
    }
    throw ParseError(t.pos, "expected a morphism");
  }

  // Lift bodies live over the source category: in Spider mode their objects
  // are star trees, in Functor mode plain generator trees.
  TermPtr mor_keyword_inner(TermMode mode, bool inner_of_lift) {
    if (!inner_of_lift) return mor_keyword(mode);
    const Tok& t = peek();
    ObjCtx cctx = mode == TermMode::Spider ? ObjCtx::CStar : ObjCtx::CPlain;
    auto three = [&](CoreKind k) {
      next();
      expect(Tok::Kind::LBrace, "'{'");
      ObjPtr a = obj(cctx);
      expect(Tok::Kind::Comma, "','");
      ObjPtr b = obj(cctx);
      expect(Tok::Kind::Comma, "','");
      ObjPtr c = obj(cctx);
      expect(Tok::Kind::RBrace, "'}'");
      return t_core(k, a, b, c);
    };
    if (t.text == "id") {
      next();
      expect(Tok::Kind::LBrace, "'{'");
      ObjPtr x = obj(cctx);
      expect(Tok::Kind::RBrace, "'}'");
      return t_id(x);
    }
    if (t.text == "al") return three(CoreKind::Alpha);
    if (t.text == "al'") return three(CoreKind::AlphaInv);
    if (t.text == "ap") return three(CoreKind::AlphaBar);
    if (t.text == "ap'") return three(CoreKind::AlphaBarInv);
    if (t.text == "dl") return three(CoreKind::DeltaL);
    if (t.text == "dr") return three(CoreKind::DeltaR);
    if (t.text == "mu" || t.text == "cm" || t.text == "F")
      throw ModeError("'" + t.text + "' cannot appear inside F[...]");
    throw ParseError(t.pos, "unknown morphism head '" + t.text + "'");
  }

  TermPtr mor(TermMode mode, bool inner_of_lift = false) {
    TermPtr f = mor_primary(mode, inner_of_lift);
    const Tok& op = peek();
    if (op.kind == Tok::Kind::Dot) {
      next();
      TermPtr g = mor_primary(mode, inner_of_lift);
      return t_comp(f, g);
    }
    if (op.kind == Tok::Kind::Star) {
      next();
      TermPtr g = mor_primary(mode, inner_of_lift);
      return t_tens(Conn::Ot, f, g);
    }
    if (op.kind == Tok::Kind::At) {
      next();
      TermPtr g = mor_primary(mode, inner_of_lift);
      return t_tens(Conn::Par, f, g);
    }
    return f;
  }
};

}  // namespace

ObjPtr parse_object(const std::string& text, TermMode mode) {
  auto toks = tokenize(text);
  Parser p{toks};
  ObjCtx ctx = mode == TermMode::Plain    ? ObjCtx::CPlain
               : mode == TermMode::Functor ? ObjCtx::DFree
                                           : ObjCtx::DSpider;
  ObjPtr o = p.obj(ctx);
  if (p.peek().kind != Tok::Kind::End)
    throw ParseError(p.peek().pos, "trailing input (missing parentheses?)");
  return o;
}

TermPtr parse_morphism(const std::string& text, TermMode mode) {
  auto toks = tokenize(text);
  Parser p{toks};
  TermPtr t = p.mor(mode);
  if (p.peek().kind != Tok::Kind::End)
    throw ParseError(p.peek().pos, "trailing input (missing parentheses?)");
  return t;
}

// ---------------------------------------------------------------------------
// Printing

std::string render(const ObjPtr& x) {
  switch (x->kind) {
    case Obj::Kind::Gen:
      return x->name;
    case Obj::Kind::FBox:
      return "F(" + render(x->inner) + ")";
    case Obj::Kind::Tens: {
      const char* c = x->conn == Conn::Ot ? "*" : "@";
      if (x->has_star)
        return "(" + render(x->left) + " " + c + " " + render(x->right) + ")";
      return "(" + render(x->left) + c + render(x->right) + ")";
    }
  }
  return "?";
}

namespace {

const char* core_name(CoreKind k) {
  switch (k) {
    case CoreKind::Alpha: return "al";
    case CoreKind::AlphaInv: return "al'";
    case CoreKind::AlphaBar: return "ap";
    case CoreKind::AlphaBarInv: return "ap'";
    case CoreKind::DeltaL: return "dl";
    case CoreKind::DeltaR: return "dr";
  }
  return "?";
}

}  // namespace

std::string render(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Id:
      return "id{" + render(t->x) + "}";
    case Term::Kind::Core:
      return std::string(core_name(t->core)) + "{" + render(t->a) + "," + render(t->b) + "," +
             render(t->c) + "}";
    case Term::Kind::Comp:
      return "(" + render(t->f) + " . " + render(t->g) + ")";
    case Term::Kind::TensOt:
      return "(" + render(t->f) + " * " + render(t->g) + ")";
    case Term::Kind::TensPar:
      return "(" + render(t->f) + " @ " + render(t->g) + ")";
    case Term::Kind::Mu:
      return "mu{" + render(t->ca) + "," + render(t->cb) + "}";
    case Term::Kind::DeltaF:
      return "cm{" + render(t->ca) + "," + render(t->cb) + "}";
    case Term::Kind::Lift:
      return "F[" + render(t->inner) + "]";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Type-checking

Endpoints core_endpoints(CoreKind k, const ObjPtr& a, const ObjPtr& b, const ObjPtr& c) {
  switch (k) {
    case CoreKind::Alpha:
      return {ot(a, ot(b, c)), ot(ot(a, b), c)};
    case CoreKind::AlphaInv:
      return {ot(ot(a, b), c), ot(a, ot(b, c))};
    case CoreKind::AlphaBar:
      return {par(a, par(b, c)), par(par(a, b), c)};
    case CoreKind::AlphaBarInv:
      return {par(par(a, b), c), par(a, par(b, c))};
    case CoreKind::DeltaL:
      return {ot(a, par(b, c)), par(ot(a, b), c)};
    case CoreKind::DeltaR:
      return {ot(par(a, b), c), par(a, ot(b, c))};
  }
  throw InternalTypeError("unknown core kind");
}

ObjPtr fobj(const ObjPtr& c_obj, TermMode mode) {
  return mode == TermMode::Spider ? fbox(star()) : fbox(c_obj);
}

namespace {

Endpoints typecheck_at(const TermPtr& t, TermMode mode, const std::string& path) {
  switch (t->kind) {
    case Term::Kind::Id:
      return {t->x, t->x};
    case Term::Kind::Core:
      return core_endpoints(t->core, t->a, t->b, t->c);
    case Term::Kind::Comp: {
      Endpoints ef = typecheck_at(t->f, mode, path + ".after");
      Endpoints eg = typecheck_at(t->g, mode, path + ".before");
      if (!obj_eq(eg.tgt, ef.src))
        throw TypeMismatch(path, "composition interface disagrees: " + render(eg.tgt) +
                                     " vs " + render(ef.src));
      return {eg.src, ef.tgt};
    }
    case Term::Kind::TensOt:
    case Term::Kind::TensPar: {
      Conn c = t->kind == Term::Kind::TensOt ? Conn::Ot : Conn::Par;
      Endpoints ef = typecheck_at(t->f, mode, path + ".left");
      Endpoints eg = typecheck_at(t->g, mode, path + ".right");
      return {tens(c, ef.src, eg.src), tens(c, ef.tgt, eg.tgt)};
    }
    case Term::Kind::Mu: {
      if (mode == TermMode::Plain) throw ModeError("mu in plain mode");
      return {ot(fobj(t->ca, mode), fobj(t->cb, mode)), fobj(ot(t->ca, t->cb), mode)};
    }
    case Term::Kind::DeltaF: {
      if (mode == TermMode::Plain) throw ModeError("cm in plain mode");
      return {fobj(par(t->ca, t->cb), mode), par(fobj(t->ca, mode), fobj(t->cb, mode))};
    }
    case Term::Kind::Lift: {
      if (mode == TermMode::Plain) throw ModeError("F[...] in plain mode");
      Endpoints e = typecheck_at(t->inner, TermMode::Plain, path + ".inner");
      return {fobj(e.src, mode), fobj(e.tgt, mode)};
    }
  }
  throw InternalTypeError("unknown term kind");
}

}  // namespace

Endpoints typecheck(const TermPtr& t, TermMode mode) { return typecheck_at(t, mode, "$"); }

}  // namespace ldc
