// HTTP middleware server exposing the three transaction endpoints over the
// order-entry templates. Configuration comes from flags, with environment
// fallbacks: SERVICE_TICK_MS, STRATEGY (suspicious|compensating),
// COMPLETENESS (complete|partial|none).

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "httplib.h"
#include "isatx/service.hpp"
#include "isatx/tpcc.hpp"

namespace {

std::string env_or(const char* name, const std::string& fallback) {
  const char* value = std::getenv(name);
  return value != nullptr ? value : fallback;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"transaction-buffering middleware server"};
  std::string host = "0.0.0.0";
  int port = 8080;
  int tick_ms = std::atoi(env_or("SERVICE_TICK_MS", "100").c_str());
  std::string strategy = env_or("STRATEGY", "suspicious");
  std::string completeness = env_or("COMPLETENESS", "complete");
  std::size_t max_intake = 0;
  app.add_option("--host", host, "bind address");
  app.add_option("--port", port, "listen port");
  app.add_option("--tick-ms", tick_ms, "manager tick interval in milliseconds");
  app.add_option("--strategy", strategy, "suspicious|compensating");
  app.add_option("--completeness", completeness, "complete|partial|none");
  app.add_option("--max-intake-per-tick", max_intake, "0 = unbounded");
  CLI11_PARSE(app, argc, argv);

  auto parsed_strategy = strategy == "suspicious"
                             ? isatx::StrategyMode::BufferSuspicious
                             : (strategy == "compensating" ? isatx::StrategyMode::BufferCompensating
                                                           : isatx::StrategyMode::BufferSuspicious);
  if (strategy != "suspicious" && strategy != "compensating") {
    std::fprintf(stderr, "error: STRATEGY must be suspicious|compensating\n");
    return 1;
  }
  auto level = isatx::parse_level_token(completeness);
  if (!level) {
    std::fprintf(stderr, "error: COMPLETENESS must be complete|partial|none\n");
    return 1;
  }
  if (tick_ms <= 0) {
    std::fprintf(stderr, "error: tick interval must be > 0\n");
    return 1;
  }

  isatx::TemplateRegistry templates;
  isatx::tpcc::register_templates(templates);
  isatx::SchemaRegistry schema = isatx::tpcc::make_schema();

  isatx::ManagerConfig manager_config;
  manager_config.strategy = parsed_strategy;
  manager_config.level = *level;

  isatx::TickConfig tick_config;
  tick_config.tick_interval = std::chrono::milliseconds(tick_ms);
  if (max_intake > 0) tick_config.max_intake_per_tick = max_intake;

  isatx::MiddlewareService service(templates, schema, isatx::tpcc::invariants(), manager_config,
                                   tick_config);

  // Tick loop with an incremental event-log tail on stdout.
  std::atomic<bool> running{true};
  std::thread ticker([&] {
    std::size_t printed = 0;
    while (running.load()) {
      service.manager_tick();
      auto events = service.event_log_snapshot();
      for (; printed < events.size(); ++printed) {
        std::printf("%s\n", isatx::format_event(events[printed]).c_str());
      }
      std::fflush(stdout);
      std::this_thread::sleep_for(std::chrono::milliseconds(tick_ms));
    }
  });

  httplib::Server server;
  isatx::attach_routes(server, service);
  std::printf("listening on %s:%d (tick=%dms strategy=%s completeness=%s)\n", host.c_str(), port,
              tick_ms, strategy.c_str(), completeness.c_str());
  bool ok = server.listen(host, port);
  running.store(false);
  ticker.join();
  if (!ok) {
    std::fprintf(stderr, "error: failed to bind %s:%d\n", host.c_str(), port);
    return 1;
  }
  return 0;
}
