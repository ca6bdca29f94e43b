#include "oscint/integrator.hpp"

#include <stdexcept>

namespace oscint {

void FrequencySchedule::validate() const {
  if (omegas.size() != breakpoints.size() + 1)
    throw std::invalid_argument("schedule needs exactly one more omega than breakpoints");
  for (std::size_t k = 1; k < breakpoints.size(); ++k)
    if (!(breakpoints[k - 1] < breakpoints[k]))
      throw std::invalid_argument("schedule breakpoints must be strictly ascending");
  for (double w : omegas)
    if (!(w > 0)) throw std::invalid_argument("schedule omegas must be positive");
}

template Trajectory<double> integrate<double>(const SecondOrderIVP<double>&, MethodId, double, double,
                                              const FrequencySchedule&);
template BootstrapResult<double> bootstrap<double>(const SecondOrderIVP<double>&, double, int);

}  // namespace oscint
