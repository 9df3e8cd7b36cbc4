#ifndef QDEFORM_QDEFORM_HPP
#define QDEFORM_QDEFORM_HPP

#include "qdeform/scalar.hpp"
#include "qdeform/qcalc.hpp"
#include "qdeform/check.hpp"
#include "qdeform/group.hpp"
#include "qdeform/crossed.hpp"
#include "qdeform/hopf.hpp"
#include "qdeform/action.hpp"
#include "qdeform/deform.hpp"
#include "qdeform/linalg.hpp"
#include "qdeform/findim.hpp"
#include "qdeform/cohomology.hpp"
#include "qdeform/config.hpp"

#endif  // QDEFORM_QDEFORM_HPP
