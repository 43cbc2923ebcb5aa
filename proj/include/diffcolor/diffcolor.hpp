#pragma once

#include "diffcolor/bounds.hpp"
#include "diffcolor/errors.hpp"
#include "diffcolor/generators.hpp"
#include "diffcolor/graph.hpp"
#include "diffcolor/io.hpp"
#include "diffcolor/labeling.hpp"
#include "diffcolor/oracle.hpp"
#include "diffcolor/schemes.hpp"
#include "diffcolor/shapes.hpp"
