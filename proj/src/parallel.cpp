#include "gauge/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace gauge {

namespace {

Exec initial_exec() {
#ifdef _OPENMP
    const char* env = std::getenv("GAUGE_EXEC");
    if (env && std::strcmp(env, "serial") == 0) return Exec::serial;
    return Exec::parallel;
#else
    return Exec::serial;
#endif
}

std::atomic<Exec>& exec_state() {
    static std::atomic<Exec> state{initial_exec()};
    return state;
}

} // namespace

Exec default_exec() { return exec_state().load(); }

void set_default_exec(Exec e) { exec_state().store(e); }

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace gauge
