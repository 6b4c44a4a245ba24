#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lexres/resolver.hpp"
#include "lexres/timestamp.hpp"

namespace lexres::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kLexiconIo = 2, kDiagnostics = 3 };

struct Config {
  std::filesystem::path lexicon_path = "lexicon.tsv";
  long long ttl_days = 30;
  long long min_uses = 1;
  // Unset means interactive.
  std::optional<Decision> batch_default;
  std::optional<Timestamp> now_override;
  std::optional<std::filesystem::path> seed_path;
  std::optional<std::filesystem::path> input;
  std::optional<std::filesystem::path> report_path;
  bool create = false;
};

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  // Where interactive answers come from. Null: stdin when the text comes from
  // --input, otherwise the controlling terminal.
  std::istream* answers = nullptr;
};

int cmd_dissect(const Config& config, Streams io);
int cmd_resolve(const Config& config, Streams io);
int cmd_evict(const Config& config, Streams io);
int cmd_stats(const Config& config, Streams io);

// Full command line, argv[0] included.
int run(const std::vector<std::string>& args, Streams io);

}  // namespace lexres::cli
