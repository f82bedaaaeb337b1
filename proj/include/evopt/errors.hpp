#pragma once

#include <stdexcept>
#include <string>

namespace evopt {

struct UnsupportedLanguage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The host cannot launch subprocesses at all. Distinct from a candidate
// failing; this aborts the pipeline.
struct SandboxFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyPool : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyBase : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnmixedLanguages : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ProviderError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CassetteMiss : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AuthMissing : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace evopt
