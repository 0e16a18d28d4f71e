#pragma once

namespace arrkh {

// Every kernel with an OpenMP loop also has a serial path. The two must agree
// exactly; the serial path is the reference the tests compare against.
enum class Exec { serial, parallel };

void set_threads(int n);
int max_threads();

}  // namespace arrkh
