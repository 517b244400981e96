#pragma once

#include <stdexcept>
#include <string>

namespace acyt {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Wedge past top degree, mismatched degrees, bad contraction axes.
struct DegreeError : Error {
  using Error::Error;
};

/// Malformed documents, unknown catalog names, parameters out of domain.
struct InputError : Error {
  using Error::Error;
};

/// The structure is not of class G1 (Nijenhuis tensor not totally skew), so no
/// metric connection with skew torsion preserves it.
struct NoCharacteristicConnection : Error {
  using Error::Error;
};

/// Chern-connection machinery asked for on a non-integrable structure.
struct NotIntegrable : Error {
  using Error::Error;
};

/// Two independently computed routes disagree, or a verified theorem fails on
/// an input satisfying its hypotheses. Always a bug somewhere, never ignored.
struct ConsistencyError : Error {
  using Error::Error;
};

}  // namespace acyt
