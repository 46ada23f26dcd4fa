// conncheck: command-line front end over session files.

#include <iostream>

#include <CLI11.hpp>

#include "conncheck/io/commands.hpp"

namespace io = conncheck::io;

int main(int argc, char** argv) {
  CLI::App app{"conncheck - connectedness checks for presented rings"};
  app.require_subcommand(1);
  std::string session_path;
  io::CommandRequest req;
  app.add_option("--session", session_path, "session file");
  app.add_option("--format", req.format, "output format")->check(CLI::IsMember({"json", "dot", "text"}));
  app.add_flag("--timing", req.timing, "include wall-clock timing in the report");

  struct CommandSpec {
    const char* name;
    const char* help;
    std::vector<const char*> positionals;
  };
  const std::vector<CommandSpec> commands{
      {"gb", "reduced Groebner basis", {"ideal", "order"}},
      {"dim", "Krull dimension of the quotient", {"ideal"}},
      {"minprimes", "minimal primes", {"ideal"}},
      {"kernel", "kernel of a ring map", {"map"}},
      {"contract", "contraction of an ideal along a map", {"ideal", "map"}},
      {"gamma", "minimal-prime graph", {"ring"}},
      {"connected", "connectivity of the minimal-prime graph", {"ring"}},
      {"disconnection", "search for a disconnecting bipartition", {"ring"}},
      {"punctured", "punctured spectrum connectivity of R/A", {"ring", "ideal"}},
      {"hl", "top local cohomology nonvanishing criterion", {"ring", "ideal"}},
      {"s2member", "S2-ification membership of a fraction u/v", {"ring", "fraction"}},
      {"s2local", "locality of the S2-ification", {"ring"}},
      {"faltings", "randomized connectedness harness", {}},
      {"product-gamma", "product of two graphs (ring names or graph files)", {"first", "second"}},
  };
  std::vector<std::vector<std::string>> values(commands.size());
  std::vector<CLI::App*> subs;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    auto* sub = app.add_subcommand(commands[i].name, commands[i].help);
    values[i].resize(commands[i].positionals.size());
    for (std::size_t k = 0; k < commands[i].positionals.size(); ++k)
      sub->add_option(commands[i].positionals[k], values[i][k])->required();
    if (std::string(commands[i].name) == "minprimes")
      sub->add_option("--strategy", req.strategy)->check(CLI::IsMember({"auto", "monomial", "split", "asserted"}));
    if (std::string(commands[i].name) == "faltings") {
      sub->add_option("--trials", req.trials)->check(CLI::PositiveNumber);
      sub->add_option("--seed", req.seed)->required();
      sub->add_option("--max-vertices", req.max_vertices)->check(CLI::Range(3, 24));
    }
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  for (std::size_t i = 0; i < subs.size(); ++i)
    if (subs[i]->parsed()) {
      req.command = commands[i].name;
      req.args = values[i];
    }

  std::optional<io::Session> session;
  if (!session_path.empty()) {
    try {
      session = io::parse_session(io::read_file(session_path));
    } catch (const conncheck::ParseError& e) {
      std::cerr << session_path << ":" << e.what() << "\n";
      return 2;
    } catch (const conncheck::PreconditionError& e) {
      std::cerr << "refused: " << e.what() << "\n";
      return 2;
    }
  }
  const auto outcome = io::execute(session ? &*session : nullptr, req);
  std::cout << outcome.out;
  std::cerr << outcome.err;
  return outcome.exit_code;
}
