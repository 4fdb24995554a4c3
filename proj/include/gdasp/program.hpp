#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "gdasp/term.hpp"

namespace gdasp {

struct source_span {
    std::string file;
    int line = 1;    // 1-based
    int column = 1;  // 1-based
};

/// Atom with optional classical (strong) negation: p(t...) or -p(t...).
struct literal {
    bool strong_neg = false;
    std::string predicate;
    std::vector<term> args;

    int arity() const { return static_cast<int>(args.size()); }
};

bool literal_equal(const literal& a, const literal& b);
literal apply_subst(const literal& l, const subst& s);

/// true iff a bijective variable renaming maps a onto b.
bool is_variant(const literal& a, const literal& b);

/// Predicate identity: polarity + name + arity.
struct pred_key {
    bool strong = false;
    std::string name;
    int arity = 0;

    auto operator<=>(const pred_key&) const = default;
};

inline pred_key key_of(const literal& l) {
    return pred_key{l.strong_neg, l.predicate, l.arity()};
}

enum class rel_op { eq, neq, lt, le, gt, ge };

/// Complement relation: = <-> !=, < <-> >=, > <-> <=.
rel_op complement(rel_op op);
const char* rel_op_text(rel_op op);  // surface spelling: = \= < =< > >=

class goal;

struct pos_goal {
    literal lit;
};
struct naf_goal {  // default negation: not p(t...)
    literal lit;
};
struct rel_goal {
    rel_op op;
    term lhs;
    term rhs;
};
struct forall_goal {  // dualizer-generated only, never in user source
    term var;          // a var term
    std::shared_ptr<const goal> body;
};

/// Body goal: positive literal, default-negated literal, arithmetic
/// relation, or universally quantified goal.
class goal {
  public:
    using node = std::variant<pos_goal, naf_goal, rel_goal, forall_goal>;

    goal() : goal(pos(literal{false, "true", {}})) {}

    static goal pos(literal l);
    static goal naf(literal l);
    static goal rel(rel_op op, term lhs, term rhs);
    static goal forall(term var, goal body);

    bool is_pos() const { return std::holds_alternative<pos_goal>(*n_); }
    bool is_naf() const { return std::holds_alternative<naf_goal>(*n_); }
    bool is_rel() const { return std::holds_alternative<rel_goal>(*n_); }
    bool is_forall() const { return std::holds_alternative<forall_goal>(*n_); }

    const pos_goal& as_pos() const { return std::get<pos_goal>(*n_); }
    const naf_goal& as_naf() const { return std::get<naf_goal>(*n_); }
    const rel_goal& as_rel() const { return std::get<rel_goal>(*n_); }
    const forall_goal& as_forall() const { return std::get<forall_goal>(*n_); }

  private:
    explicit goal(std::shared_ptr<const node> n) : n_(std::move(n)) {}
    std::shared_ptr<const node> n_;
};

goal apply_subst(const goal& g, const subst& s);
void collect_vars(const literal& l, std::vector<int>& out);
void collect_vars(const goal& g, std::vector<int>& out);  // forall-bound vars excluded

enum class rule_origin { user, dual, nmr, abducible };

/// Head FALSE (std::nullopt) marks a global constraint.
struct rule {
    std::optional<literal> head;
    std::vector<goal> body;
    int id = 0;
    rule_origin origin = rule_origin::user;
    source_span span;

    bool is_constraint() const { return !head.has_value(); }
};

/// Variant of r with every variable replaced by a fresh one; sharing
/// inside the rule is preserved.
rule rename_apart(const rule& r, var_gen& gen);
literal rename_apart(const literal& l, var_gen& gen);
std::vector<goal> rename_apart(const std::vector<goal>& goals, var_gen& gen);

/// Natural-language print template for a predicate: pattern with @(Var)
/// interpolation slots naming the declared argument variables.
struct pred_template {
    pred_key pred;
    std::vector<std::string> arg_names;  // declared head variables, by position
    std::string pattern;
};

struct program {
    std::vector<rule> rules;
    std::set<pred_key> abducibles;  // always strong=false
    std::map<pred_key, pred_template> templates;
    std::vector<std::vector<goal>> queries;
};

}  // namespace gdasp
