#include "povmkit/eps.hpp"

#include <atomic>

namespace povmkit {

namespace {
std::atomic<double> g_eps{1e-10};
}

double default_eps() { return g_eps.load(std::memory_order_relaxed); }

void set_default_eps(double eps) { g_eps.store(eps, std::memory_order_relaxed); }

}  // namespace povmkit
