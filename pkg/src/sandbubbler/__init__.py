"""Sand-bubbler pellet patterns with tunable symmetry, and aesthetic measures."""

from .color import (RGB, RYB, ColorBreakSpec, ColorPermutation, ColorWheel, complementary,
                    apply_color_permutation, break_color_symmetry, validate_homomorphism)
from .measures import bfl, intensity, luminosity, sym
from .pattern import GenConfig, Pattern, Pellet, Point2, Rgb, generate_pattern, pellet_position
from .raster import CanvasConfig, read_image, render, write_image
from .symmetry import BreakMode, BreakSpec, IsoKind, Isometry, apply_isometry, break_symmetry

__version__ = "0.1.0"
