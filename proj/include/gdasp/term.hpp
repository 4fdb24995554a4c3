#pragma once

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "gdasp/rational.hpp"

namespace gdasp {

class term;

struct var_t {
    std::string name;  // for printing only
    int id;            // identity
};
struct const_t {
    std::string name;
};
struct num_t {
    rational value;
};
struct compound_t {
    std::string functor;
    std::vector<term> args;  // arity >= 1; zero-arity symbols are const_t
};

/// First-order term: variable, symbolic constant, exact rational, or compound.
/// Immutable; copies share the underlying node.
class term {
  public:
    using node = std::variant<var_t, const_t, num_t, compound_t>;

    term() : term(constant("?")) {}

    static term var(std::string name, int id);
    static term constant(std::string name);
    static term num(rational value);
    static term compound(std::string functor, std::vector<term> args);

    bool is_var() const { return std::holds_alternative<var_t>(*n_); }
    bool is_const() const { return std::holds_alternative<const_t>(*n_); }
    bool is_num() const { return std::holds_alternative<num_t>(*n_); }
    bool is_compound() const { return std::holds_alternative<compound_t>(*n_); }

    const var_t& as_var() const { return std::get<var_t>(*n_); }
    const const_t& as_const() const { return std::get<const_t>(*n_); }
    const num_t& as_num() const { return std::get<num_t>(*n_); }
    const compound_t& as_compound() const { return std::get<compound_t>(*n_); }

    bool is_ground() const;

  private:
    explicit term(std::shared_ptr<const node> n) : n_(std::move(n)) {}
    std::shared_ptr<const node> n_;
};

bool term_equal(const term& a, const term& b);

/// Idempotent substitution: var id -> term. Ordered map keeps all
/// iteration deterministic.
using subst = std::map<int, term>;

/// Replace every bound variable in t, recursively, until no bound
/// variable remains. Total; unbound variables pass through.
term apply_subst(const term& t, const subst& s);

/// Variable ids in first-occurrence order (depth-first, left to right).
void collect_vars(const term& t, std::vector<int>& out);
std::vector<int> vars_of(const term& t);

bool occurs(int var_id, const term& t);

/// Fresh-variable source; one per solver run.
class var_gen {
  public:
    int fresh_id() { return next_++; }
    term fresh(const std::string& name) { return term::var(name, next_++); }
    int watermark() const { return next_; }

  private:
    int next_ = 0;
};

}  // namespace gdasp
