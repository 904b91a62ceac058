#include "gnorm/parallel.hpp"

#include <atomic>

namespace gnorm {

namespace {
std::atomic<ExecMode> g_mode{ExecMode::Parallel};
}

ExecMode default_exec_mode() { return g_mode.load(); }
void set_default_exec_mode(ExecMode mode) { g_mode.store(mode); }

}  // namespace gnorm
