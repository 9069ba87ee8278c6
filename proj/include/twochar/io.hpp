#pragma once

// Text definition files, cyclotomic literals and JSON output.
//
// Definition files are lines of `key = value` with `#` comments. Values
// are integers, double-quoted strings, or bracketed lists of values; a
// list may span several lines.

#include <map>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "twochar/cohomology.hpp"
#include "twochar/grpd_rep.hpp"
#include "twochar/two_rep.hpp"

namespace twochar {

struct Value {
  std::variant<long, std::string, std::vector<Value>> data;
  int line = 0;

  bool is_int() const { return std::holds_alternative<long>(data); }
  bool is_string() const { return std::holds_alternative<std::string>(data); }
  bool is_list() const { return std::holds_alternative<std::vector<Value>>(data); }
  /// Accessors throw ParseError naming the line on a type mismatch.
  long as_int() const;
  const std::string& as_string() const;
  const std::vector<Value>& as_list() const;
};

class KeyValues {
 public:
  static KeyValues parse(const std::string& text);

  bool has(const std::string& key) const { return entries_.count(key) > 0; }
  /// Throws ParseError when the key is missing.
  const Value& get(const std::string& key) const;
  /// Throws ParseError for keys outside `allowed`.
  void allow_only(const std::vector<std::string>& allowed) const;

 private:
  std::map<std::string, Value> entries_;
};

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

/// "C6", "D4" (order 8), "S3", "Q8", "C1", and products such as "C2xC2".
GroupPtr builtin_group(const std::string& name);

/// Group file: `builtin = "S3"`, or `builtin = "cyclic"` with `n = 6`
/// (also "dihedral", "symmetric"), or `degree` with `generators` in cycle
/// notation; optional `labels` overrides element labels.
GroupPtr parse_group_file(const std::string& text);
GroupPtr load_group(const std::string& path);

/// The subgroup generated by a comma-separated list of element labels.
/// Commas inside brackets do not split, so "(0,1),(1,0)" names two elements.
Subgroup parse_subgroup_spec(const GroupPtr& g, const std::string& spec);

/// Flat sums of monomials built from integers, fractions a/b and zN^k,
/// joined by + - *. zN needs N to divide the level.
CycNumber parse_cyclotomic(const std::string& text, int level);
/// Inverse of parse_cyclotomic; roots of unity print as zN^k.
std::string format_cyclotomic(const CycNumber& x);

/// Cocycle file: `modulus = M` and `table = [[e(g,h)]]` row-major.
Cocycle parse_cocycle_file(const GroupPtr& g, const std::string& text);
std::string format_cocycle_file(const Cocycle& c);

/// 2-rep file: `level`, `n`, `sigma` (one cycle string per element),
/// `coh` nested as [g][h][j] and `unit` per point, entries being cyclotomic
/// literals (strings or integers); a single literal for `coh` or `unit`
/// means that constant everywhere. The optional `group` reference, when it
/// names a builtin, and the optional `group_order` and `elements` are
/// checked against g. The result always passes check_two_rep; otherwise
/// ValidationError.
TwoRep parse_two_rep_file(const GroupPtr& g, const std::string& text);
std::string format_two_rep_file(const TwoRep& rho, const std::string& group_reference = "");

using Json = nlohmann::ordered_json;

/// {"level": N, "coeffs": [["num", "den"], ...]}
Json to_json(const CycNumber& x);
CycNumber cyclotomic_from_json(const Json& j);
Json to_json(const CohomologyGroup& h);
Json to_json(const Cocycle& c);
Json to_json(const TwoRep& rho);
/// Keyed by the label of each class representative.
Json to_json(const ClassFunction& chi);
/// Keyed by "(g,h)" pair labels, in commuting-pair order.
Json to_json(const TwoClassFunction& chi);
Json to_json(const FiniteGroupoid& g);

}  // namespace twochar
