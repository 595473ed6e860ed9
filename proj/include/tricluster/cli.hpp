#pragma once

#include "tricluster/io.hpp"

#include <iosfwd>
#include <string>

namespace tc {

constexpr int kCacheVersion = 1;
constexpr const char* kCacheEnv = "TRICLUSTER_CACHE_DIR";

struct JobSpec {
    std::string command;     // quiver | ar | mpr | ice | hom | higgs | braid
    std::string type;        // e.g. "A3"
    std::string orient;      // e.g. "1->2 2->3"; empty means the default orientation
    std::string quiver_file; // overrides type / orient
    std::string format = "text";
    Json options = Json::object();  // only the flags that were given
    std::string cache_dir;
};

Quiver job_quiver(const JobSpec& job);
// job with normalized options and the quiver in canonical JSON form
Json canonical_job(const JobSpec& job);
std::string cache_key(const JobSpec& job);
// the artifact; throws ParseError / GuardError
std::string execute(const JobSpec& job);
// exit code: 0 ok, 2 parse error, 3 guard violation, 4 internal failure
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

}
