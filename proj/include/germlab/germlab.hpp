#ifndef GERMLAB_GERMLAB_HPP
#define GERMLAB_GERMLAB_HPP

#include <germlab/curve_geometry.hpp>
#include <germlab/g_fields.hpp>
#include <germlab/germ_file.hpp>
#include <germlab/jet.hpp>
#include <germlab/lie_catalog.hpp>
#include <germlab/matrix.hpp>
#include <germlab/monomial.hpp>
#include <germlab/numeric_series.hpp>
#include <germlab/parser.hpp>
#include <germlab/rational.hpp>
#include <germlab/report.hpp>
#include <germlab/reproduce.hpp>
#include <germlab/subspace.hpp>
#include <germlab/tangent.hpp>

#endif
