#pragma once

#include <string>

#include "syzint/system.hpp"

namespace syzint {

class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos + 1)), pos(pos)
    {
    }
    std::size_t pos;
};

std::string print_poly(const Registry& reg, const Poly& p);
std::string print_multiindex(const Registry& reg, const MultiIndex& j);
std::string print_expr(const Registry& reg, const FuncExpr& e);
std::string print_label_expr(const System& sys, const LabelExpr& e);

/// Grammar: terms joined by +/-, each a '*'-separated product of a rational,
/// monomial factors var or var^k, and at most one derivative func or
/// func_<vars>. Derivative suffixes are normalized on parse.
FuncExpr parse_expression(const Registry& reg, const std::string& text);

struct SystemFile {
    std::vector<std::string> variables;
    std::vector<std::pair<std::string, std::vector<std::string>>> functions;
    std::vector<std::string> equations;
    std::string ranking = "total";
    std::string strategy = "syzygy";
    int max_steps = 1000;
    int max_divergence_subset = 0; ///< 0 = all variables
};

SystemFile parse_system_file(const std::string& json_text);
SystemFile load_system_file(const std::string& path);

Registry build_registry(const SystemFile& file);
System build_system(const SystemFile& file);

} // namespace syzint
