#pragma once

#include "qgor/classify.hpp"
#include "qgor/collapse.hpp"
#include "qgor/error.hpp"
#include "qgor/exact_matrix.hpp"
#include "qgor/facet_io.hpp"
#include "qgor/field.hpp"
#include "qgor/fixtures.hpp"
#include "qgor/graphs.hpp"
#include "qgor/hochster.hpp"
#include "qgor/homology.hpp"
#include "qgor/liaison.hpp"
#include "qgor/serialize.hpp"
#include "qgor/simplicial_complex.hpp"
