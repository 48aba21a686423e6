#pragma once

namespace pvclift {

/// Selects between the OpenMP kernel and the serial reference it is tested
/// against. Both produce bit-identical results.
enum class Execution { serial, parallel };

/// Sets the OpenMP team size for subsequent parallel kernels; n <= 0 keeps
/// the runtime default. No-op when built without OpenMP.
void set_thread_count(int n);
int thread_count();

}  // namespace pvclift
