// Walks a point of V along the flow of D and prints the separating
// invariants, which stay constant, together with the stratum it lies in.

#include <iostream>

#include "lnd/lnd.hpp"

int main() {
  using namespace lnd;
  const PaperContext ctx = builtin_context();
  const Point p = parse_point("1, 2, -1, 1/3, 5", ctx.V);
  std::cout << "D = " << ctx.D.to_string() << "\n";
  for (int a = -2; a <= 2; ++a) {
    const Point q = orbit_point(ctx.D, Rational(a), p);
    std::cout << "a = " << a << "  " << q.to_string() << "  f =";
    for (const auto& v : separating_values(ctx, q)) std::cout << ' ' << v;
    std::cout << "\n";
  }
  std::cout << "stratum: " << to_string(stratum_of(ctx, p)) << "\n";

  // On the fibre x = s = 0 every f_i vanishes, so these two are not told apart.
  const Point q1 = parse_point("0, 0, 1, 0, 1", ctx.V);
  const Point q2 = parse_point("0, 0, 1, 0, -1", ctx.V);
  std::cout << "stratum: " << to_string(stratum_of(ctx, q1)) << "\n";
  std::cout << "separated: " << std::boolalpha << separates(ctx, p, q1) << ' ' << separates(ctx, q1, q2) << "\n";
}
