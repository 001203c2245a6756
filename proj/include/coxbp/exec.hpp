#pragma once

namespace coxbp {

// Sweeps come in a serial reference form and an OpenMP form.
enum class Exec { serial, parallel };

void set_thread_count(int n);  // 0 keeps the OpenMP default

} // namespace coxbp
