#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "apl/io.hpp"

namespace apl::cli {

using io::Json;

// Exit codes.
constexpr int kPass = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CommandSpec {
  std::string command;
  std::string sub;  // empty for single-level commands
  std::vector<std::string> options;
  std::vector<std::string> flags;
  std::string help;
};

const std::vector<CommandSpec>& command_table();

struct Request {
  std::string command;
  std::string sub;
  std::map<std::string, std::string> options;
  std::set<std::string> flags;
  std::string store_as;  // recipe steps only: workspace name for the produced object
};

struct Outcome {
  Json report;
  int status = kPass;
};

// Runs one command against the workspace. Enumeration records go to `stream`
// as JSON lines when it is set, and are collected into the report otherwise.
Outcome execute(const Request& req, io::Document& workspace, std::ostream* stream = nullptr);

// Executes every recipe step in order; later steps see objects stored by earlier ones.
Outcome run_recipe(io::Document& doc);

Request request_from_step(const Json& step);

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace apl::cli
