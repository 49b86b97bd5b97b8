"""CMake-backed build for the hopfext extension module.

Mirrors the stock pybind11 cmake_example: the wheel contains the python
package from python/hopfext plus the compiled _core module.
"""

import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        dest = Path(self.get_ext_fullpath(ext.name)).resolve()
        build_dir = Path(self.build_temp) / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)
        source_dir = Path(__file__).resolve().parent
        cfg = "Debug" if self.debug else "Release"
        subprocess.run(
            [
                "cmake",
                "-S",
                str(source_dir),
                "-B",
                str(build_dir),
                f"-DCMAKE_BUILD_TYPE={cfg}",
                "-DHOPFEXT_BUILD_PYTHON=ON",
                f"-DPYTHON_EXECUTABLE={sys.executable}",
            ],
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", str(build_dir), "--target", "_core", "-j"],
            check=True,
        )
        built = next(build_dir.glob("_core*.so"))
        dest.parent.mkdir(parents=True, exist_ok=True)
        self.copy_file(built, dest)


setup(
    ext_modules=[CMakeExtension("hopfext._core")],
    cmdclass={"build_ext": CMakeBuild},
)
