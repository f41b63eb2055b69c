import runpy
from setuptools import setup, find_packages

version = runpy.run_path('confspace_tools/version.py')['__version__']
setup(name='confspace_tools',
      packages=find_packages(exclude=['test', 'test.*']),
      version=version,
      install_requires=['luigi', 'numpy', 'scipy', 'sympy', 'networkx'],
      entry_points={'console_scripts': ['confspace = confspace_tools.cli:cli']},
      license='MIT')
