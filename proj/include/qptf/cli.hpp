#pragma once

namespace qptf {

// Parses argv, runs the requested pipeline, and writes its outputs.
// Returns 0 on success, 1 when a pipeline reports failure (detection without
// a ridge, verification outside tolerance, runtime I/O trouble), 2 on usage
// errors.
int dispatch(int argc, const char* const* argv);

} // namespace qptf
