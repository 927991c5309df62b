#include "gnc/parallel.hpp"

#include <cstdlib>
#include <string>

namespace gnc {

int default_thread_count()
{
    const char* env = std::getenv("GNC_THREADS");
    if (env == nullptr || *env == '\0') return 1;
    try {
        const int n = std::stoi(env);
        return n >= 1 ? n : 1;
    } catch (const std::exception&) {
        return 1;
    }
}

} // namespace gnc
