#include <algorithm>
#include <ostream>
#include <sstream>

#include "twistq/json_io.hpp"
#include "twistq_cli/cli.hpp"

#define TOML_EXCEPTIONS 1
#include "toml.hpp"

namespace twistq::cli {

namespace {

bool has_flag(const std::vector<std::string>& args, const std::string& flag) {
  return std::find(args.begin(), args.end(), flag) != args.end();
}

// File-level defaults; a command table may override each of them.
struct Shared {
  std::optional<std::string> type;
  std::optional<int64_t> depth, window;
  bool json = false;

  void read(const toml::table& t) {
    if (auto v = t["type"].value<std::string>()) type = *v;
    if (auto v = t["depth"].value<int64_t>()) depth = *v;
    if (auto v = t["window"].value<int64_t>()) window = *v;
    if (auto v = t["json"].value<bool>()) json = *v;
  }
};

}  // namespace

int run_batch(const std::string& path, std::ostream& out, std::ostream& err) {
  toml::table doc;
  try {
    doc = toml::parse_file(path);
  } catch (const toml::parse_error& e) {
    err << "twistq run: " << path << ":" << e.source().begin.line << ": " << e.description() << '\n';
    return kInputError;
  }
  Shared base;
  base.read(doc);

  const toml::array* cmds = doc["command"].as_array();
  if (!cmds || cmds->empty()) {
    err << "twistq run: no [[command]] entries in " << path << '\n';
    return kInputError;
  }

  int worst = kOk;
  Json collected = Json::array();
  std::size_t k = 0;
  for (const auto& node : *cmds) {
    ++k;
    const toml::table* t = node.as_table();
    const toml::array* a = t ? (*t)["args"].as_array() : nullptr;
    if (!a) {
      err << "twistq run: command " << k << " lacks an args array\n";
      worst = std::max(worst, static_cast<int>(kInputError));
      continue;
    }
    std::vector<std::string> args;
    bool ok = true;
    a->for_each([&](const auto& el) {
      if constexpr (toml::is_string<decltype(el)>)
        args.push_back(*el);
      else
        ok = false;
    });
    if (!ok || args.empty() || args.front() == "run") {
      err << "twistq run: command " << k << " must be a non-empty list of strings and not 'run'\n";
      worst = std::max(worst, static_cast<int>(kInputError));
      continue;
    }
    Shared s = base;
    s.read(*t);
    if (s.type && !has_flag(args, "--type")) args.insert(args.end(), {"--type", *s.type});
    if (s.depth && !has_flag(args, "--depth")) args.insert(args.end(), {"--depth", std::to_string(*s.depth)});
    if (s.window && !has_flag(args, "--window")) args.insert(args.end(), {"--window", std::to_string(*s.window)});
    if (s.json && !has_flag(args, "--json")) args.push_back("--json");

    std::ostringstream buf;
    const int code = run(args, buf, err);
    worst = std::max(worst, code);
    if (base.json) {
      Json entry{{"args", args}, {"exit", code}};
      entry["output"] = buf.str().empty() ? Json(nullptr) : Json::parse(buf.str(), nullptr, false);
      collected.push_back(entry);
    } else {
      std::string line;
      for (const auto& x : args) line += " " + x;
      out << "## [" << k << "]" << line << "  (exit " << code << ")\n" << buf.str();
    }
  }
  if (base.json) out << collected.dump(2) << '\n';
  return worst;
}

}  // namespace twistq::cli
