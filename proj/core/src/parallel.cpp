#include "subcyc/parallel.hpp"

#include <cstdlib>
#include <string>

namespace subcyc {

unsigned thread_budget() {
    unsigned budget = std::thread::hardware_concurrency();
    if (budget == 0) budget = 1;
    if (const char* env = std::getenv("SUBCYC_THREADS")) {
        try {
            const long parsed = std::stol(env);
            if (parsed >= 1) budget = static_cast<unsigned>(parsed);
        } catch (const std::exception&) {
            // ignore malformed values, keep the default
        }
    }
    return budget;
}

} // namespace subcyc
