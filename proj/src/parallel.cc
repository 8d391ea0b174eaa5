#include <indlab/parallel.hh>

#include <cstdlib>
#include <string>

namespace indlab
{
    auto default_workers() -> unsigned
    {
        if (const char * env = std::getenv("INDLAB_WORKERS")) {
            try {
                auto value = std::stol(env);
                if (value > 0)
                    return static_cast<unsigned>(value);
            }
            catch (const std::exception &) {
            }
        }
        auto hardware = std::thread::hardware_concurrency();
        return hardware > 0 ? hardware : 1;
    }
}
