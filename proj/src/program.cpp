#include "gdasp/program.hpp"

#include <algorithm>

namespace gdasp {

bool literal_equal(const literal& a, const literal& b) {
    if (a.strong_neg != b.strong_neg || a.predicate != b.predicate ||
        a.args.size() != b.args.size())
        return false;
    for (size_t i = 0; i < a.args.size(); ++i)
        if (!term_equal(a.args[i], b.args[i])) return false;
    return true;
}

literal apply_subst(const literal& l, const subst& s) {
    literal out{l.strong_neg, l.predicate, {}};
    out.args.reserve(l.args.size());
    for (const auto& a : l.args) out.args.push_back(apply_subst(a, s));
    return out;
}

namespace {

bool variant_walk(const term& a, const term& b, std::map<int, int>& fwd,
                  std::map<int, int>& bwd) {
    if (a.is_var() != b.is_var()) return false;
    if (a.is_var()) {
        int ia = a.as_var().id, ib = b.as_var().id;
        auto f = fwd.find(ia);
        auto g = bwd.find(ib);
        if (f == fwd.end() && g == bwd.end()) {
            fwd[ia] = ib;
            bwd[ib] = ia;
            return true;
        }
        return f != fwd.end() && g != bwd.end() && f->second == ib && g->second == ia;
    }
    if (a.is_const()) return b.is_const() && a.as_const().name == b.as_const().name;
    if (a.is_num()) return b.is_num() && a.as_num().value == b.as_num().value;
    if (!a.is_compound() || !b.is_compound()) return false;
    const auto& ca = a.as_compound();
    const auto& cb = b.as_compound();
    if (ca.functor != cb.functor || ca.args.size() != cb.args.size()) return false;
    for (size_t i = 0; i < ca.args.size(); ++i)
        if (!variant_walk(ca.args[i], cb.args[i], fwd, bwd)) return false;
    return true;
}

}  // namespace

bool is_variant(const literal& a, const literal& b) {
    if (a.strong_neg != b.strong_neg || a.predicate != b.predicate ||
        a.args.size() != b.args.size())
        return false;
    std::map<int, int> fwd, bwd;
    for (size_t i = 0; i < a.args.size(); ++i)
        if (!variant_walk(a.args[i], b.args[i], fwd, bwd)) return false;
    return true;
}

rel_op complement(rel_op op) {
    switch (op) {
        case rel_op::eq: return rel_op::neq;
        case rel_op::neq: return rel_op::eq;
        case rel_op::lt: return rel_op::ge;
        case rel_op::ge: return rel_op::lt;
        case rel_op::gt: return rel_op::le;
        case rel_op::le: return rel_op::gt;
    }
    return rel_op::eq;
}

const char* rel_op_text(rel_op op) {
    switch (op) {
        case rel_op::eq: return "=";
        case rel_op::neq: return "\\=";
        case rel_op::lt: return "<";
        case rel_op::le: return "=<";
        case rel_op::gt: return ">";
        case rel_op::ge: return ">=";
    }
    return "=";
}

goal goal::pos(literal l) {
    return goal(std::make_shared<const node>(pos_goal{std::move(l)}));
}
goal goal::naf(literal l) {
    return goal(std::make_shared<const node>(naf_goal{std::move(l)}));
}
goal goal::rel(rel_op op, term lhs, term rhs) {
    return goal(std::make_shared<const node>(rel_goal{op, std::move(lhs), std::move(rhs)}));
}
goal goal::forall(term var, goal body) {
    return goal(std::make_shared<const node>(
        forall_goal{std::move(var), std::make_shared<const goal>(std::move(body))}));
}

goal apply_subst(const goal& g, const subst& s) {
    if (g.is_pos()) return goal::pos(apply_subst(g.as_pos().lit, s));
    if (g.is_naf()) return goal::naf(apply_subst(g.as_naf().lit, s));
    if (g.is_rel()) {
        const auto& r = g.as_rel();
        return goal::rel(r.op, apply_subst(r.lhs, s), apply_subst(r.rhs, s));
    }
    const auto& f = g.as_forall();
    // the bound var never appears in substitutions the engine builds
    return goal::forall(f.var, apply_subst(*f.body, s));
}

void collect_vars(const literal& l, std::vector<int>& out) {
    for (const auto& a : l.args) collect_vars(a, out);
}

void collect_vars(const goal& g, std::vector<int>& out) {
    if (g.is_pos()) {
        collect_vars(g.as_pos().lit, out);
    } else if (g.is_naf()) {
        collect_vars(g.as_naf().lit, out);
    } else if (g.is_rel()) {
        collect_vars(g.as_rel().lhs, out);
        collect_vars(g.as_rel().rhs, out);
    } else {
        const auto& f = g.as_forall();
        std::vector<int> inner;
        collect_vars(*f.body, inner);
        int bound = f.var.as_var().id;
        for (int id : inner)
            if (id != bound && std::find(out.begin(), out.end(), id) == out.end())
                out.push_back(id);
    }
}

namespace {

term rename_term(const term& t, std::map<int, term>& fresh, var_gen& gen) {
    if (t.is_var()) {
        const auto& v = t.as_var();
        auto it = fresh.find(v.id);
        if (it == fresh.end()) it = fresh.emplace(v.id, gen.fresh(v.name)).first;
        return it->second;
    }
    if (t.is_compound()) {
        const auto& c = t.as_compound();
        std::vector<term> args;
        args.reserve(c.args.size());
        for (const auto& a : c.args) args.push_back(rename_term(a, fresh, gen));
        return term::compound(c.functor, std::move(args));
    }
    return t;
}

literal rename_literal(const literal& l, std::map<int, term>& fresh, var_gen& gen) {
    literal out{l.strong_neg, l.predicate, {}};
    out.args.reserve(l.args.size());
    for (const auto& a : l.args) out.args.push_back(rename_term(a, fresh, gen));
    return out;
}

goal rename_goal(const goal& g, std::map<int, term>& fresh, var_gen& gen) {
    if (g.is_pos()) return goal::pos(rename_literal(g.as_pos().lit, fresh, gen));
    if (g.is_naf()) return goal::naf(rename_literal(g.as_naf().lit, fresh, gen));
    if (g.is_rel()) {
        const auto& r = g.as_rel();
        return goal::rel(r.op, rename_term(r.lhs, fresh, gen), rename_term(r.rhs, fresh, gen));
    }
    const auto& f = g.as_forall();
    term v = rename_term(f.var, fresh, gen);
    return goal::forall(v, rename_goal(*f.body, fresh, gen));
}

}  // namespace

rule rename_apart(const rule& r, var_gen& gen) {
    std::map<int, term> fresh;
    rule out;
    out.id = r.id;
    out.origin = r.origin;
    out.span = r.span;
    if (r.head) out.head = rename_literal(*r.head, fresh, gen);
    out.body.reserve(r.body.size());
    for (const auto& g : r.body) out.body.push_back(rename_goal(g, fresh, gen));
    return out;
}

literal rename_apart(const literal& l, var_gen& gen) {
    std::map<int, term> fresh;
    return rename_literal(l, fresh, gen);
}

std::vector<goal> rename_apart(const std::vector<goal>& goals, var_gen& gen) {
    std::map<int, term> fresh;
    std::vector<goal> out;
    out.reserve(goals.size());
    for (const auto& g : goals) out.push_back(rename_goal(g, fresh, gen));
    return out;
}

}  // namespace gdasp
