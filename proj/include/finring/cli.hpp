#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace finring::cli {

enum class OutputMode { text, json };

struct CliConfig {
  std::size_t order_cap = 4096;
  std::size_t exhaustive_cap = 256;
  std::optional<std::string> registry_path;
  OutputMode output_mode = OutputMode::text;
};

/// Defaults, with RING_ORDER_CAP applied when set.
CliConfig default_config();

/// Runs one `ring` subcommand. Returns 0 on success, 1 on a verification
/// failure, 2 on malformed input or configuration errors.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace finring::cli
