#include "gdasp/term.hpp"

#include <algorithm>

namespace gdasp {

term term::var(std::string name, int id) {
    return term(std::make_shared<const node>(var_t{std::move(name), id}));
}
term term::constant(std::string name) {
    return term(std::make_shared<const node>(const_t{std::move(name)}));
}
term term::num(rational value) {
    return term(std::make_shared<const node>(num_t{std::move(value)}));
}
term term::compound(std::string functor, std::vector<term> args) {
    return term(std::make_shared<const node>(compound_t{std::move(functor), std::move(args)}));
}

bool term::is_ground() const {
    if (is_var()) return false;
    if (is_compound()) {
        for (const auto& a : as_compound().args)
            if (!a.is_ground()) return false;
    }
    return true;
}

bool term_equal(const term& a, const term& b) {
    if (a.is_var()) return b.is_var() && a.as_var().id == b.as_var().id;
    if (a.is_const()) return b.is_const() && a.as_const().name == b.as_const().name;
    if (a.is_num()) return b.is_num() && a.as_num().value == b.as_num().value;
    if (!b.is_compound()) return false;
    const auto& ca = a.as_compound();
    const auto& cb = b.as_compound();
    if (ca.functor != cb.functor || ca.args.size() != cb.args.size()) return false;
    for (size_t i = 0; i < ca.args.size(); ++i)
        if (!term_equal(ca.args[i], cb.args[i])) return false;
    return true;
}

term apply_subst(const term& t, const subst& s) {
    if (t.is_var()) {
        auto it = s.find(t.as_var().id);
        if (it == s.end()) return t;
        return apply_subst(it->second, s);
    }
    if (t.is_compound()) {
        const auto& c = t.as_compound();
        std::vector<term> args;
        args.reserve(c.args.size());
        bool changed = false;
        for (const auto& a : c.args) {
            term na = apply_subst(a, s);
            changed = changed || !term_equal(na, a);
            args.push_back(std::move(na));
        }
        if (!changed) return t;
        return term::compound(c.functor, std::move(args));
    }
    return t;
}

void collect_vars(const term& t, std::vector<int>& out) {
    if (t.is_var()) {
        int id = t.as_var().id;
        if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
    } else if (t.is_compound()) {
        for (const auto& a : t.as_compound().args) collect_vars(a, out);
    }
}

std::vector<int> vars_of(const term& t) {
    std::vector<int> out;
    collect_vars(t, out);
    return out;
}

bool occurs(int var_id, const term& t) {
    if (t.is_var()) return t.as_var().id == var_id;
    if (t.is_compound()) {
        for (const auto& a : t.as_compound().args)
            if (occurs(var_id, a)) return true;
    }
    return false;
}

}  // namespace gdasp
