#include "ldc/analysis.hpp"

namespace ldc {

bool letter_binds_front(Letter l) {
  return l == Letter::Al || l == Letter::Ap || l == Letter::Dl;
}
bool letter_in_y(Letter l) { return l == Letter::Al || l == Letter::Ali; }
bool letter_in_z(Letter l) { return !letter_in_y(l); }

const char* letter_name(Letter l) {
  switch (l) {
    case Letter::Al: return "al";
    case Letter::Ali: return "ali";
    case Letter::Ap: return "ap";
    case Letter::Api: return "api";
    case Letter::Dl: return "dl";
    case Letter::Dr: return "dr";
  }
  return "?";
}

std::optional<Letter> letter_of_name(const std::string& name) {
  if (name == "al") return Letter::Al;
  if (name == "ali") return Letter::Ali;
  if (name == "ap") return Letter::Ap;
  if (name == "api") return Letter::Api;
  if (name == "dl") return Letter::Dl;
  if (name == "dr") return Letter::Dr;
  return std::nullopt;
}

std::vector<ObjPtr> assign_slots(const Word& u, const ObjVec& vec) {
  if (u.size() != vec.size())
    throw LengthMismatch("word length " + std::to_string(u.size()) + " vs vector length " +
                         std::to_string(vec.size()));
  std::vector<ObjPtr> out(u.size());
  std::size_t lo = 0, hi = vec.size();
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (letter_binds_front(u[k]))
      out[k] = vec[lo++];
    else
      out[k] = vec[--hi];
  }
  return out;
}

namespace {

Hlr hlr_step(const Hlr& in, Letter l, const ObjPtr& a) {
  switch (l) {
    case Letter::Al:
    case Letter::Dl:
      return {ot(a, in.h), ot(a, in.l), in.r};
    case Letter::Ali:
    case Letter::Dr:
      return {ot(in.h, a), in.l, ot(in.r, a)};
    case Letter::Ap:
      return {par(a, in.h), par(a, in.l), in.r};
    case Letter::Api:
      return {par(in.h, a), in.l, par(in.r, a)};
  }
  throw InternalTypeError("unknown letter");
}

void check_alphabet(const BaseSplit& base, const Word& u) {
  for (Letter l : u) {
    bool ok = base.conn == Conn::Ot ? letter_in_y(l) : letter_in_z(l);
    if (!ok)
      throw AlphabetMismatch(std::string("letter ") + letter_name(l) +
                             " does not act on this base connective");
  }
}

}  // namespace

Hlr eval_hlr_over(const Hlr& base, const Word& u, const ObjVec& vec) {
  auto slots = assign_slots(u, vec);
  Hlr cur = base;
  for (std::size_t k = u.size(); k-- > 0;) cur = hlr_step(cur, u[k], slots[k]);
  return cur;
}

Hlr eval_hlr(const BaseSplit& base, const Word& u, const ObjVec& vec) {
  check_alphabet(base, u);
  Hlr b{tens(base.conn, base.left, base.right), base.left, base.right};
  return eval_hlr_over(b, u, vec);
}

TermPtr build_spine_term(const TermPtr& base_term, const Hlr& base, const Word& u,
                         const ObjVec& vec) {
  auto slots = assign_slots(u, vec);
  TermPtr t = base_term;
  Hlr cur = base;
  for (std::size_t k = u.size(); k-- > 0;) {
    const ObjPtr& a = slots[k];
    switch (u[k]) {
      case Letter::Al:
        t = t_comp(t_core(CoreKind::Alpha, a, cur.l, cur.r), t_tens(Conn::Ot, t_id(a), t));
        break;
      case Letter::Ali:
        t = t_comp(t_core(CoreKind::AlphaInv, cur.l, cur.r, a), t_tens(Conn::Ot, t, t_id(a)));
        break;
      case Letter::Ap:
        t = t_comp(t_core(CoreKind::AlphaBar, a, cur.l, cur.r), t_tens(Conn::Par, t_id(a), t));
        break;
      case Letter::Api:
        t = t_comp(t_core(CoreKind::AlphaBarInv, cur.l, cur.r, a), t_tens(Conn::Par, t, t_id(a)));
        break;
      case Letter::Dl:
        t = t_comp(t_core(CoreKind::DeltaL, a, cur.l, cur.r), t_tens(Conn::Ot, t_id(a), t));
        break;
      case Letter::Dr:
        t = t_comp(t_core(CoreKind::DeltaR, cur.l, cur.r, a), t_tens(Conn::Ot, t, t_id(a)));
        break;
    }
    cur = hlr_step(cur, u[k], a);
  }
  return t;
}

TermPtr build_tau(const BaseSplit& base, const Word& u, const ObjVec& vec) {
  if (base.conn != Conn::Ot) throw AlphabetMismatch("tau expects a tensor base");
  check_alphabet(base, u);
  Hlr b{ot(base.left, base.right), base.left, base.right};
  return build_spine_term(t_id(b.h), b, u, vec);
}

TermPtr build_kappa(const BaseSplit& base, const Word& u, const ObjVec& vec) {
  if (base.conn != Conn::Par) throw AlphabetMismatch("kappa expects a par base");
  check_alphabet(base, u);
  Hlr b{par(base.left, base.right), base.left, base.right};
  return build_spine_term(t_id(b.h), b, u, vec);
}

// ---------------------------------------------------------------------------
// Factors

namespace {

Endpoints factor_core_endpoints(const Factor& f, TermMode mode) {
  switch (f.kind) {
    case Factor::Kind::Core:
      return core_endpoints(f.core, f.a, f.b, f.c);
    case Factor::Kind::Mu:
      return {ot(fobj(f.ca, mode), fobj(f.cb, mode)), fobj(ot(f.ca, f.cb), mode)};
    case Factor::Kind::Delta:
      return {fobj(par(f.ca, f.cb), mode), par(fobj(f.ca, mode), fobj(f.cb, mode))};
    case Factor::Kind::Lift: {
      Endpoints e = typecheck(f.lifted, TermMode::Plain);
      return {fobj(e.src, mode), fobj(e.tgt, mode)};
    }
  }
  throw InternalTypeError("unknown factor kind");
}

TermPtr factor_core_term(const Factor& f) {
  switch (f.kind) {
    case Factor::Kind::Core:
      return t_core(f.core, f.a, f.b, f.c);
    case Factor::Kind::Mu:
      return t_mu(f.ca, f.cb);
    case Factor::Kind::Delta:
      return t_cm(f.ca, f.cb);
    case Factor::Kind::Lift:
      return t_lift(f.lifted);
  }
  throw InternalTypeError("unknown factor kind");
}

}  // namespace

Endpoints factor_endpoints(const Factor& f, TermMode mode) {
  Endpoints e = factor_core_endpoints(f, mode);
  for (std::size_t k = f.whisker.size(); k-- > 0;) {
    const Whisk& w = f.whisker[k];
    if (w.side == Side::Left) {
      e.src = tens(w.conn, w.bystander, e.src);
      e.tgt = tens(w.conn, w.bystander, e.tgt);
    } else {
      e.src = tens(w.conn, e.src, w.bystander);
      e.tgt = tens(w.conn, e.tgt, w.bystander);
    }
  }
  return e;
}

TermPtr factor_term(const Factor& f) {
  TermPtr t = factor_core_term(f);
  for (std::size_t k = f.whisker.size(); k-- > 0;) {
    const Whisk& w = f.whisker[k];
    if (w.side == Side::Left)
      t = t_tens(w.conn, t_id(w.bystander), t);
    else
      t = t_tens(w.conn, t, t_id(w.bystander));
  }
  return t;
}

std::string render(const Factor& f) { return render(factor_term(f)); }

// ---------------------------------------------------------------------------
// Atomize

namespace {

bool term_is_identity(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Id:
      return true;
    case Term::Kind::Comp:
      return term_is_identity(t->f) && term_is_identity(t->g);
    case Term::Kind::TensOt:
    case Term::Kind::TensPar:
      return term_is_identity(t->f) && term_is_identity(t->g);
    case Term::Kind::Lift:
      return term_is_identity(t->inner);
    default:
      return false;
  }
}

void atomize_into(const TermPtr& t, TermMode mode, std::vector<Factor>& out) {
  switch (t->kind) {
    case Term::Kind::Id:
      return;
    case Term::Kind::Core:
      out.push_back(Factor::coh(t->core, t->a, t->b, t->c));
      return;
    case Term::Kind::Mu:
      out.push_back(Factor::mu(t->ca, t->cb));
      return;
    case Term::Kind::DeltaF:
      out.push_back(Factor::delta(t->ca, t->cb));
      return;
    case Term::Kind::Lift:
      if (!term_is_identity(t->inner)) out.push_back(Factor::lift(t->inner));
      return;
    case Term::Kind::Comp:
      atomize_into(t->f, mode, out);
      atomize_into(t->g, mode, out);
      return;
    case Term::Kind::TensOt:
    case Term::Kind::TensPar: {
      Conn c = t->kind == Term::Kind::TensOt ? Conn::Ot : Conn::Par;
      Endpoints ef = typecheck(t->f, mode);
      Endpoints eg = typecheck(t->g, mode);
      // f ⊠ g = (f ⊠ id_{tgt g}) ∘ (id_{src f} ⊠ g)
      std::vector<Factor> fs, gs;
      atomize_into(t->f, mode, fs);
      atomize_into(t->g, mode, gs);
      for (const Factor& x : fs) out.push_back(x.whiskered(Side::Right, c, eg.tgt));
      for (const Factor& x : gs) out.push_back(x.whiskered(Side::Left, c, ef.src));
      return;
    }
  }
}

}  // namespace

std::vector<Factor> atomize(const TermPtr& t, TermMode mode) {
  typecheck(t, mode);  // reject ill-typed input up front
  std::vector<Factor> out;
  atomize_into(t, mode, out);
  return out;
}

}  // namespace ldc
