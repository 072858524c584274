import setuptools

with open("README.md", "r") as fh:
    long_description = fh.read()

setuptools.setup(
	name = 'pyturncalc',
	version = '0.1-beta',
	long_description=long_description, # Long description read from the the readme file
    long_description_content_type="text/markdown",
	packages = ['pyturncalc'],
	license = 'MIT',
	description = "SU(2) gates as Hamilton's turns: geometric composition, geometric phase and waveplate synthesis",
	keywords = ['SU(2)', 'QUATERNION', 'POINCARE SPHERE', 'JONES CALCULUS', 'GEOMETRIC PHASE', 'WAVEPLATE'],
	install_requires = [
		'numpy>=1.17',
		'matplotlib>=3.3',
	],
	entry_points = {
		'console_scripts': ['pyturncalc = pyturncalc.cli:main'],
	},
	classifiers = [
		'Development Status :: 4 - Beta',
		'Intended Audience :: Science/Research',
		'Topic :: Scientific/Engineering :: Physics',
		'License :: OSI Approved :: MIT License',
        "Operating System :: OS Independent",
		'Programming Language :: Python :: 3.6',
		'Programming Language :: Python :: 3.7',
		'Programming Language :: Python :: 3.8',
		'Programming Language :: Python :: 3.9',
		'Programming Language :: Python :: 3.10',
	],
)
