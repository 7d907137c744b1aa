#pragma once

// Ring constructor expressions:
//   zmod:<n>  mat:<k>:<spec>  tri:<k>:<spec>  prod:<spec>,<spec>
//   corner:<spec>:<element-literal>  table:<path>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "finring/ring.hpp"

namespace finring {

struct BuildOptions {
  std::size_t order_cap = kDefaultOrderCap;
  /// table: specs are validated unless this is cleared (the validate command
  /// loads unchecked tables so it can report the failure itself).
  bool validate_tables = true;
};

RingPtr parse_ring_spec(std::string_view spec, const BuildOptions& options = {});

/// Reads a JSON table document {"order", "add", "mul", "one"}; zero is index 0.
RingPtr load_table_ring(const std::string& path, const BuildOptions& options = {});

/// The built-in ring registry used by `verify --ring registry`.
std::vector<std::string> default_registry();

/// One RingSpec per line; blank lines and `#` comments are skipped.
std::vector<std::string> read_registry_file(const std::string& path);

}  // namespace finring
