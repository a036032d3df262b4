#pragma once

#include "hombrace/errors.hpp"
#include "hombrace/field.hpp"
#include "hombrace/linalg.hpp"
#include "hombrace/multilinear.hpp"
#include "hombrace/report.hpp"
#include "hombrace/split.hpp"
#include "hombrace/hom_algebra.hpp"
#include "hombrace/o_operator.hpp"
#include "hombrace/cochain.hpp"
#include "hombrace/cohomology.hpp"
#include "hombrace/deformation.hpp"
#include "hombrace/corpus.hpp"
