// Copyright 2026 The trajadapt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// trajadapt: adapt / eval / serve / render / prompt.
// Exit codes: 0 success, 1 adaptation or evaluation failure, 2 usage error.

#include <unistd.h>

#include <csignal>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "trajadapt/dataset.hpp"
#include "trajadapt/json_io.hpp"
#include "trajadapt/llm_client.hpp"
#include "trajadapt/prompt.hpp"
#include "trajadapt/render.hpp"
#include "trajadapt/service.hpp"
#include "trajadapt/session.hpp"

namespace {

using namespace trajadapt;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LlmFlags {
  std::string transport = "mock";
  std::string fixtures;
  std::string endpoint;
  std::string model = "gpt-4o";
  double temperature = 0.1;
  double timeout = 60.0;
  int retries = 2;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--llm", transport, "LLM transport")
        ->check(CLI::IsMember({"mock", "live"}));
    cmd->add_option("--fixtures", fixtures,
                    "Directory of <id>.<iter>.resp.txt files (mock)");
    cmd->add_option("--endpoint", endpoint,
                    "OpenAI-compatible base URL (live; default OPENAI_BASE_URL)");
    cmd->add_option("--model", model, "Model name (live)");
    cmd->add_option("--temperature", temperature, "Sampling temperature")
        ->check(CLI::Range(0.0, 2.0));
    cmd->add_option("--timeout", timeout, "Request timeout in seconds (live)");
    cmd->add_option("--retries", retries, "Retries on transport failure (live)");
  }

  LlmConfig config() const {
    LlmConfig c;
    c.transport = *parse_transport(transport);
    c.fixtures_dir = fixtures;
    c.endpoint = endpoint;
    c.model = model;
    c.temperature = temperature;
    c.timeout_seconds = timeout;
    c.max_retries = retries;
    if (c.transport == Transport::kMock && fixtures.empty()) {
      throw UsageError("--fixtures is required with --llm mock");
    }
    try {
      c.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    return c;
  }
};

template <class F>
auto load_or_usage(const std::string& what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const std::exception& e) {
    throw UsageError(what + ": " + e.what());
  }
}

void print_proposal(const Session& s) {
  const Iteration& it = s.iterations().back();
  std::cout << "\n=== iteration " << s.iterations().size() << " ===\n"
            << "High-level plan:\n"
            << it.proposal->high_level_plan << "\n\nCode:\n"
            << it.proposal->code << "\n";
  const Trajectory& t = *it.outcome->modified;
  std::cout << "\nPreview: " << t.size() << " waypoints, start ["
            << format_number(t.front().x) << ", " << format_number(t.front().y)
            << ", " << format_number(t.front().z) << "], goal ["
            << format_number(t.back().x) << ", " << format_number(t.back().y)
            << ", " << format_number(t.back().z) << "]\n";
}

// ---- adapt -------------------------------------------------------------------

struct AdaptArgs {
  std::string scene, traj, instruction, out, export_path, fixture_id = "adhoc";
  bool yes = false;
  int repair_budget = 1;
  LlmFlags llm;
};

int run_adapt(const AdaptArgs& a) {
  const Scene scene =
      load_or_usage("scene", [&] { return load_scene_file(a.scene); });
  const Trajectory traj =
      load_or_usage("trajectory", [&] { return load_trajectory_file(a.traj); });
  const LlmConfig llm = a.llm.config();
  const auto client =
      load_or_usage("llm", [&] { return make_client(llm); });

  SessionConfig cfg;
  cfg.fixture_id = a.fixture_id;
  cfg.auto_repair_budget = a.repair_budget;
  Session session("cli", a.instruction, scene, traj, client, cfg);
  session.generate();

  const bool interactive = !a.yes && isatty(STDIN_FILENO) != 0;
  while (session.state() == SessionState::kProposed) {
    print_proposal(session);
    if (!interactive) {
      if (!a.yes) {
        std::cerr << "stdin is not a terminal; pass --yes to approve\n";
        break;
      }
      session.submit_verdict(Verdict::approve());
      break;
    }
    std::cout << "\nApprove? [Enter/y = approve, q = quit, anything else = "
                 "feedback]\n> "
              << std::flush;
    std::string line;
    if (!std::getline(std::cin, line) || line == "q") break;
    if (line.empty() || line == "y" || line == "yes") {
      session.submit_verdict(Verdict::approve());
    } else {
      std::cout << "Regenerating with feedback...\n";
      session.submit_verdict(Verdict::feedback(line));
    }
  }

  if (!a.export_path.empty()) {
    write_text_file(a.export_path, session.to_json().dump(2));
  }
  if (session.state() == SessionState::kApproved) {
    write_text_file(a.out, to_json(*session.final_trajectory()).dump(2) + "\n");
    std::cout << "approved; wrote " << a.out << "\n";
    return kOk;
  }
  if (const auto err = session.latest_error()) {
    std::cerr << "adaptation failed (" << err->kind << "): " << err->message
              << "\n";
  } else {
    std::cerr << "adaptation not approved\n";
  }
  return kFailure;
}

// ---- eval --------------------------------------------------------------------

struct EvalArgs {
  std::string corpus, report;
  int jobs = 0;
  int repair_budget = 1;
  LlmFlags llm;
};

int run_eval_cmd(const EvalArgs& a) {
  const auto corpus =
      load_or_usage("corpus", [&] { return load_corpus(a.corpus); });
  const LlmConfig llm = a.llm.config();
  const auto client = load_or_usage("llm", [&] { return make_client(llm); });
  EvalOptions opts;
  opts.jobs = a.jobs;
  opts.session.auto_repair_budget = a.repair_budget;
  const EvalReport report = run_eval(corpus, client, opts);
  if (!a.report.empty()) {
    write_text_file(a.report, to_json(report).dump(2) + "\n");
  }
  for (const auto& s : report.samples) {
    if (!s.passed) {
      std::cout << "FAIL " << s.id << " (" << s.checks_passed << "/"
                << s.checks_total << " checks)";
      if (s.error) std::cout << ": " << *s.error;
      std::cout << "\n";
    }
  }
  for (const auto& [cat, t] : report.categories) {
    std::printf("%-16s %d/%d\n", std::string(to_string(cat)).c_str(), t.passed,
                t.total);
  }
  std::printf("overall          %d/%d (%.1f%%) in %.2f s\n",
              report.overall.passed, report.overall.total,
              100.0 * report.overall.rate(), report.wall_clock_seconds);
  return report.overall.passed == report.overall.total ? kOk : kFailure;
}

// ---- serve -------------------------------------------------------------------

struct ServeArgs {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string corpus, export_dir;
  LlmFlags llm;
};

Service* g_service = nullptr;

int run_serve(const ServeArgs& a) {
  ServiceConfig cfg;
  cfg.llm = a.llm.config();
  if (!a.corpus.empty()) {
    cfg.corpus = load_or_usage("corpus", [&] { return load_corpus(a.corpus); });
  }
  if (!a.export_dir.empty()) cfg.export_dir = a.export_dir;
  Service service =
      load_or_usage("service", [&] { return Service(std::move(cfg)); });
  const int port = service.bind(a.host, a.port);
  if (port < 0) {
    std::cerr << "cannot bind " << a.host << ":" << a.port << "\n";
    return kFailure;
  }
  g_service = &service;
  std::signal(SIGINT, [](int) {
    if (g_service) g_service->stop();
  });
  std::cout << "listening on http://" << a.host << ":" << port << "\n"
            << std::flush;
  service.listen();
  g_service = nullptr;
  return kOk;
}

// ---- render / prompt ---------------------------------------------------------

int run_render(const std::string& orig, const std::string& adapted,
               const std::string& scene_path, const std::string& out) {
  const Trajectory o =
      load_or_usage("original", [&] { return load_trajectory_file(orig); });
  std::optional<Trajectory> ad;
  if (!adapted.empty()) {
    ad = load_or_usage("adapted", [&] { return load_trajectory_file(adapted); });
  }
  Scene scene;
  if (!scene_path.empty()) {
    scene = load_or_usage("scene", [&] { return load_scene_file(scene_path); });
  }
  write_text_file(out, render_svg(o, ad, scene));
  return kOk;
}

int run_prompt(const std::string& scene_path, const std::string& instruction,
               const std::vector<std::string>& feedback) {
  Scene scene;
  if (!scene_path.empty()) {
    scene = load_or_usage("scene", [&] { return load_scene_file(scene_path); });
  }
  std::cout << build_prompt({instruction, scene, feedback, {}}) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Language-driven trajectory adaptation"};
  app.require_subcommand(1);

  AdaptArgs adapt;
  auto* adapt_cmd = app.add_subcommand("adapt", "Adapt one trajectory");
  adapt_cmd->add_option("--scene", adapt.scene, "Scene file")->required();
  adapt_cmd->add_option("--traj", adapt.traj, "Trajectory file")->required();
  adapt_cmd->add_option("--instruction", adapt.instruction, "Instruction")
      ->required();
  adapt_cmd->add_option("--out", adapt.out, "Output trajectory file")->required();
  adapt_cmd->add_option("--fixture-id", adapt.fixture_id,
                        "Fixture id for the mock transport");
  adapt_cmd->add_option("--export", adapt.export_path, "Write the session record");
  adapt_cmd->add_option("--repair-budget", adapt.repair_budget,
                        "Automatic repair attempts per generation")
      ->check(CLI::NonNegativeNumber);
  adapt_cmd->add_flag("--yes,-y", adapt.yes, "Approve the first proposal");
  adapt.llm.add_to(adapt_cmd);

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a corpus");
  eval_cmd->add_option("--corpus", eval.corpus, "Corpus file (JSONL)")->required();
  eval_cmd->add_option("--report", eval.report, "Report file");
  eval_cmd->add_option("--jobs,-j", eval.jobs, "Parallel samples (0 = auto)")
      ->check(CLI::NonNegativeNumber);
  eval_cmd->add_option("--repair-budget", eval.repair_budget,
                       "Automatic repair attempts per generation")
      ->check(CLI::NonNegativeNumber);
  eval.llm.add_to(eval_cmd);

  ServeArgs serve;
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP API");
  serve_cmd->add_option("--host", serve.host, "Bind address");
  serve_cmd->add_option("--port", serve.port, "Port (0 = any)")
      ->check(CLI::Range(0, 65535));
  serve_cmd->add_option("--corpus", serve.corpus, "Corpus file (JSONL)");
  serve_cmd->add_option("--export-dir", serve.export_dir,
                        "Directory for session records");
  serve.llm.add_to(serve_cmd);

  std::string r_orig, r_adapted, r_scene, r_out;
  auto* render_cmd = app.add_subcommand("render", "Plot trajectories as SVG");
  render_cmd->add_option("--orig", r_orig, "Original trajectory")->required();
  render_cmd->add_option("--adapted", r_adapted, "Adapted trajectory");
  render_cmd->add_option("--scene", r_scene, "Scene file");
  render_cmd->add_option("--out", r_out, "Output SVG")->required();

  std::string p_scene, p_instruction;
  std::vector<std::string> p_feedback;
  auto* prompt_cmd = app.add_subcommand("prompt", "Print the prompt");
  prompt_cmd->add_option("--scene", p_scene, "Scene file");
  prompt_cmd->add_option("--instruction", p_instruction, "Instruction")
      ->required();
  prompt_cmd->add_option("--feedback", p_feedback, "Feedback entries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*adapt_cmd) return run_adapt(adapt);
    if (*eval_cmd) return run_eval_cmd(eval);
    if (*serve_cmd) return run_serve(serve);
    if (*render_cmd) return run_render(r_orig, r_adapted, r_scene, r_out);
    if (*prompt_cmd) return run_prompt(p_scene, p_instruction, p_feedback);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
