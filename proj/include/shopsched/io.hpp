#pragma once

// Readers and writers for the text formats described in docs/FORMATS.md.

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "shopsched/cdsdhp.hpp"
#include "shopsched/core_model.hpp"
#include "shopsched/dominoes.hpp"
#include "shopsched/hardness_gen.hpp"
#include "shopsched/verify.hpp"

namespace shopsched::io {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Matrix text (`m n` header, m rows) or the JSON form, detected by the first
/// non-blank character. Ragged rows raise ValidationError(DimensionMismatch);
/// zero entries parse and are left to validate_instance().
FlowShopInstance read_instance(std::istream& in);
FlowShopInstance read_instance_file(const std::string& path);

void write_instance(std::ostream& out, const FlowShopInstance& inst);
void write_instance_json(std::ostream& out, const FlowShopInstance& inst);

/// `V A` header then A arcs `tail head`, labels 1..V.
Digraph read_digraph(std::istream& in);
void write_digraph(std::ostream& out, const Digraph& g);

/// One `left right` pair per line; ids follow line order from 0.
std::vector<OrientedTile> read_tiles(std::istream& in);

/// Line 1 `m`, then sx, sy and t lines of m integers each.
NmtsInstance read_nmts(std::istream& in);

/// `shop <jobshop|openshop> n` header then n lines `m1 m2 route`.
ShopInstance read_shop(std::istream& in);
void write_shop(std::ostream& out, const ShopInstance& shop);
void write_certificate(std::ostream& out, const ReductionCertificate& cert);

/// Comma-separated 1-based job numbers, e.g. "5,6,7".
JobSequence parse_sequence(std::string_view text);

}  // namespace shopsched::io
