#include "lexres/cli.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "lexres/decision_providers.hpp"
#include "lexres/dissector.hpp"
#include "lexres/lexicon.hpp"
#include "lexres/seed.hpp"

namespace lexres::cli {

namespace {

// Advisory lock on `<lexicon>.lock`, held for the lifetime of the object.
class LexiconLock {
 public:
  explicit LexiconLock(const std::filesystem::path& lexicon) {
    auto path = lexicon;
    path += ".lock";
    fd_ = ::open(path.c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0644);
    if (fd_ < 0) throw IoFailure("cannot open lock file " + path.string());
    if (::flock(fd_, LOCK_EX) != 0) {
      ::close(fd_);
      throw IoFailure("cannot lock " + path.string());
    }
  }
  LexiconLock(const LexiconLock&) = delete;
  LexiconLock& operator=(const LexiconLock&) = delete;
  ~LexiconLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }

 private:
  int fd_ = -1;
};

Timestamp now_of(const Config& config) {
  if (config.now_override) return *config.now_override;
  return std::chrono::floor<std::chrono::seconds>(std::chrono::system_clock::now());
}

// Nullopt when the input cannot be read.
std::optional<std::string> read_input(const Config& config, std::istream& in) {
  if (config.input) {
    std::ifstream file(*config.input, std::ios::binary);
    if (!file) return std::nullopt;
    return std::string(std::istreambuf_iterator<char>(file), {});
  }
  return std::string(std::istreambuf_iterator<char>(in), {});
}

Lexicon fresh_lexicon(const Config& config, Timestamp now) {
  if (!config.seed_path) {
    const auto words = default_seed_words();
    return seeded_lexicon(words, now);
  }
  std::ifstream seed(*config.seed_path);
  if (!seed) throw IoFailure("cannot read seed file " + config.seed_path->string());
  const auto words = read_seed_words(seed);
  return seeded_lexicon(words, now);
}

bool lexicon_exists(const Config& config) {
  std::error_code ec;
  return std::filesystem::exists(config.lexicon_path, ec);
}

void print_diagnostics(const DissectionResult& result, std::ostream& err) {
  for (const auto& d : result.diagnostics) {
    const char* tag = d.kind == Diagnostic::Kind::NoRuleApplies ? "error" : "note";
    err << tag << ": discourse " << d.source_ordinal << ": " << d.message << '\n';
  }
}

}  // namespace

int cmd_dissect(const Config& config, Streams io) {
  const auto text = read_input(config, io.in);
  if (!text) {
    io.err << "cannot read input " << config.input->string() << '\n';
    return kLexiconIo;
  }
  if (normalized_tokens(*text).empty()) {
    io.err << "usage: lexres dissect [--input PATH]  (input text is empty)\n";
    return kUsage;
  }
  const auto result = dissect_text(*text);
  io.out << "primitive\tpattern\tsource_ordinal\n";
  for (const auto& p : result.primitives) {
    io.out << render(p) << '\t' << render(generalize(p)) << '\t' << p.source_ordinal << '\n';
  }
  print_diagnostics(result, io.err);
  return result.has_uncovered_spans() ? kDiagnostics : kOk;
}

int cmd_resolve(const Config& config, Streams io) {
  const auto text = read_input(config, io.in);
  if (!text) {
    io.err << "cannot read input " << config.input->string() << '\n';
    return kLexiconIo;
  }
  if (normalized_tokens(*text).empty()) {
    io.err << "usage: lexres resolve --lexicon PATH [--input PATH]  (input text is empty)\n";
    return kUsage;
  }
  const auto now = now_of(config);

  try {
    LexiconLock lock(config.lexicon_path);
    Lexicon lexicon = lexicon_exists(config) ? load(config.lexicon_path)
                                             : fresh_lexicon(config, now);
    const auto dissection = dissect_text(*text);
    print_diagnostics(dissection, io.err);

    ResolutionReport report;
    if (config.batch_default) {
      BatchDecisionProvider provider(*config.batch_default);
      report = resolve(dissection.primitives, dissection.bindings, lexicon, provider, now);
    } else {
      std::istream* answers = io.answers;
      std::ifstream tty;
      if (!answers && config.input) answers = &io.in;
      if (!answers) {
        tty.open("/dev/tty");
        answers = &tty;
      }
      InteractiveDecisionProvider provider(*answers, io.err, lexicon);
      report = resolve(dissection.primitives, dissection.bindings, lexicon, provider, now);
    }

    save(lexicon, config.lexicon_path);
    if (config.report_path) {
      std::ofstream tsv(*config.report_path);
      write_report_tsv(report, tsv);
      if (!tsv) io.err << "cannot write report " << config.report_path->string() << '\n';
    }
    io.out << summarize(report) << '\n';
    return dissection.has_uncovered_spans() ? kDiagnostics : kOk;
  } catch (const LexiconError& e) {
    io.err << "lexicon error: " << e.what() << '\n';
    return kLexiconIo;
  }
}

int cmd_evict(const Config& config, Streams io) {
  try {
    LexiconLock lock(config.lexicon_path);
    auto lexicon = load(config.lexicon_path);
    const auto evicted = lexicon.evict_stale(now_of(config), days(config.ttl_days),
                                             config.min_uses);
    for (const auto& s : evicted) io.out << s << '\n';
    save(lexicon, config.lexicon_path);
    return kOk;
  } catch (const LexiconError& e) {
    io.err << "lexicon error: " << e.what() << '\n';
    return kLexiconIo;
  }
}

int cmd_stats(const Config& config, Streams io) {
  try {
    Lexicon lexicon;
    if (!lexicon_exists(config) && config.create) {
      LexiconLock lock(config.lexicon_path);
      lexicon = fresh_lexicon(config, now_of(config));
      save(lexicon, config.lexicon_path);
    } else {
      lexicon = load(config.lexicon_path);
    }
    const auto s = lexicon.stats();
    io.out << "names=" << s.names << " abbreviations=" << s.abbreviations
           << " common=" << s.common << '\n';
    return kOk;
  } catch (const LexiconError& e) {
    io.err << "lexicon error: " << e.what() << '\n';
    return kLexiconIo;
  }
}

int run(const std::vector<std::string>& args, Streams io) {
  CLI::App app{"Dissects text into primitive discourses and resolves unknown nouns against a "
               "persistent lexicon.",
               "lexres"};
  app.require_subcommand(1);

  Config config;
  std::string now_text;
  std::string batch_text;

  auto* dissect_cmd = app.add_subcommand("dissect", "print primitive discourses and patterns");
  auto* resolve_cmd = app.add_subcommand("resolve", "update the lexicon from text");
  auto* evict_cmd = app.add_subcommand("evict", "delete stale, rarely used entries");
  auto* stats_cmd = app.add_subcommand("stats", "count entries by kind");

  for (auto* sub : {dissect_cmd, resolve_cmd}) {
    sub->add_option("--input", config.input, "text file (default: standard input)");
  }
  for (auto* sub : {resolve_cmd, evict_cmd, stats_cmd}) {
    sub->add_option("--lexicon", config.lexicon_path, "lexicon file")->capture_default_str();
    sub->add_option("--now", now_text, "current time, ISO-8601 UTC");
  }
  for (auto* sub : {resolve_cmd, stats_cmd}) {
    sub->add_option("--seed", config.seed_path, "CommonWord list for a new lexicon");
  }
  resolve_cmd->add_option("--batch", batch_text, "answer every prompt with name|abbr|skip")
      ->check(CLI::IsMember({"name", "abbr", "skip"}));
  resolve_cmd->add_option("--report", config.report_path, "write the report TSV here");
  evict_cmd->add_option("--ttl-days", config.ttl_days, "idle days before eviction")
      ->check(CLI::Range(1LL, std::numeric_limits<long long>::max()))
      ->capture_default_str();
  evict_cmd->add_option("--min-uses", config.min_uses, "evict only at or below this use count")
      ->check(CLI::Range(1LL, std::numeric_limits<long long>::max()))
      ->capture_default_str();
  stats_cmd->add_flag("--create", config.create, "create a seeded lexicon if missing");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    io.out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    io.err << e.what() << '\n' << app.help();
    return kUsage;
  }

  if (!now_text.empty()) {
    config.now_override = parse_iso8601(now_text);
    if (!config.now_override) {
      io.err << "--now: expected YYYY-MM-DDTHH:MM:SSZ, got '" << now_text << "'\n";
      return kUsage;
    }
  }
  if (batch_text == "name") config.batch_default = Decision::name();
  if (batch_text == "abbr") config.batch_default = Decision::abbreviation();
  if (batch_text == "skip") config.batch_default = Decision::skip();

  if (dissect_cmd->parsed()) return cmd_dissect(config, io);
  if (resolve_cmd->parsed()) return cmd_resolve(config, io);
  if (evict_cmd->parsed()) return cmd_evict(config, io);
  return cmd_stats(config, io);
}

}  // namespace lexres::cli
